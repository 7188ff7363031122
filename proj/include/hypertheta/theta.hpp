#pragma once

// Recursive theta body of an r-uniform hypergraph.
//
// A point f lies in theta(H) when there is a symmetric F with diag F = f,
// the bordered matrix (1 f^T; f F) PSD, and for every vertex x with a
// nonempty link the row F_x[V_x] lies in F(x,x) * theta(H_x). For r = 1 the
// body is IND(H): the box on vertices that are not themselves edges.
//
// The SDP encoding is homogenized: each recursion node is one PSD block
// (t g^T; g G) with g = diag G, and "g in t * theta(H_x)" is enforced by
// pinning the child corner to the parent diagonal entry.

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertheta/hypergraph.hpp"
#include "hypertheta/sdp.hpp"

namespace hypertheta {

/// One recursion node. `vertices[i]` is the parent-local index of node
/// vertex i (the root uses 0..n-1). Children are keyed by node-local vertex.
struct ThetaCertificate {
    int uniformity = 1;
    std::vector<Vertex> vertices;
    double scale = 0.0;      ///< t
    Eigen::MatrixXd matrix;  ///< G
    std::vector<std::pair<Vertex, ThetaCertificate>> children;
};

struct CertificateCheck {
    bool ok = true;
    double min_eigenvalue = 0.0;  ///< smallest eigenvalue over all bordered blocks
    double max_residual = 0.0;    ///< largest violated linking / zero equality
    std::string failure;
};

/// Checks the structural conditions of every node against `h`: PSD bordered
/// blocks, child corners and diagonals tied to the parent, zero entries on
/// graph edges, and the box condition at 1-uniform leaves.
CertificateCheck verify_certificate(const Hypergraph& h, const ThetaCertificate& cert, double tol = 1e-6);

/// Certificate whose every block is zero; valid for any hypergraph.
ThetaCertificate zero_certificate(const Hypergraph& h);

struct SolverDiagnostics {
    std::string status;
    int iterations = 0;
    int blocks = 0;
    int constraints = 0;
    int dropped_constraints = 0;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double relative_gap = 0.0;
    double primal_infeasibility = 0.0;
    double dual_infeasibility = 0.0;
    std::string message;
};

SolverDiagnostics diagnostics_of(const SdpProblem& p, const SdpSolution& s);

// ---------------------------------------------------------------------------
// Building blocks shared with the symmetry reduction.

/// Address of one scalar SDP variable X_block(row, col).
struct ScalarRef {
    int block;
    int row;
    int col;
};

/// Block layout of one recursion node as added to an SdpProblem. Inactive
/// vertices are pinned to zero and left out of the block; `position[v]` is
/// the block row of vertex v, or -1. A node without a block (block = -1) is
/// identically zero.
struct NodeLayout {
    Hypergraph hypergraph{1, 0};
    int block = -1;
    std::vector<Vertex> vertices;
    std::vector<int> position;
    std::vector<std::pair<Vertex, NodeLayout>> children;
};

/// Adds a node block for `h`: border equal to the diagonal, corner tied to
/// `corner` (when given), diagonal entry v tied to `diag[v]` (when `diag` is
/// nonempty), and the recursive link constraints below it. `active` (empty
/// means all) marks the vertices that may be nonzero; links are always taken
/// in the full hypergraph.
NodeLayout add_theta_node(SdpProblem& p, const Hypergraph& h, std::optional<ScalarRef> corner,
                          std::span<const ScalarRef> diag, std::span<const char> active = {});

ThetaCertificate extract_certificate(const NodeLayout& layout, const std::vector<Eigen::MatrixXd>& blocks);

// ---------------------------------------------------------------------------

/// SDP whose optimum is theta(H, w); the root is block 0 with corner 1.
SdpProblem assemble_theta_sdp(const Hypergraph& h, std::span<const double> w);

struct ThetaResult {
    double value = 0.0;
    WeightVector f;
    ThetaCertificate certificate;
    SolverDiagnostics diagnostics;
};

/// theta(H, w) = max w.f over theta(H). 1-uniform inputs are evaluated
/// combinatorially. Throws SolverError when the SDP does not converge.
ThetaResult theta(const Hypergraph& h, std::span<const double> w, const SdpOptions& options = {});
ThetaResult theta(const Hypergraph& h, const SdpOptions& options = {});

struct GaugeResult {
    double value = 0.0;  ///< min t with f in t * theta(H)
    ThetaCertificate certificate;
    SolverDiagnostics diagnostics;
};

/// Smallest t >= 0 with f in t * theta(H), for f >= 0; +inf when no scaling
/// works (only possible for r = 1). Vertices outside the support of f are
/// eliminated from every block.
GaugeResult theta_gauge(const Hypergraph& h, std::span<const double> f, const SdpOptions& options = {});

struct MembershipResult {
    bool member = false;
    double gauge = 0.0;
    std::optional<ThetaCertificate> certificate;  ///< root scale 1, set when member
    SolverDiagnostics diagnostics;
};

/// f in theta(H) up to `tol` on the gauge. Entries below -tol or above 1+tol
/// are rejected without solving.
MembershipResult theta_membership(const Hypergraph& h, std::span<const double> f, double tol = 1e-7,
                                  const SdpOptions& options = {});

struct ThetaDualResult {
    double value = 0.0;  ///< lambda
    Eigen::MatrixXd z;
    ThetaCertificate certificate;  ///< over the complement, root scale lambda
    SolverDiagnostics diagnostics;
};

/// min lambda with (lambda w^T; w Z) PSD, diag Z = w and the rows of Z in
/// scaled theta bodies of the complement links. Requires r >= 2, w >= 0.
ThetaDualResult theta_dual(const Hypergraph& h, std::span<const double> w, const SdpOptions& options = {});

/// f.g; at most 1 whenever f in theta(H) and g in the dual body of H.
double antiblocker_probe(std::span<const double> f, std::span<const double> g);

}  // namespace hypertheta
