#pragma once

// Permutation groups acting on hypergraph vertices, pair orbits, and the
// symmetry-reduced theta programs (vertex-transitive reduction, invariant
// membership, and the Mantel hypergraphs of triangles in K_n).

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypertheta/hypergraph.hpp"
#include "hypertheta/rational.hpp"
#include "hypertheta/theta.hpp"

namespace hypertheta {

/// perm[x] is the image of x.
using Permutation = std::vector<int>;

class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    /// Every group element, identity first. Throws InstanceTooLarge past `cap`.
    std::vector<Permutation> elements(std::size_t cap = 100000) const;

    static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

private:
    int degree_;
    std::vector<Permutation> generators_;
};

/// Orbits of V and of ordered pairs V x V under the diagonal action.
struct OrbitStructure {
    int n = 0;
    std::vector<int> vertex_orbit;                 ///< orbit id per vertex
    std::vector<std::vector<Vertex>> vertex_orbits;
    std::vector<int> pair_orbit;                   ///< orbit id of (x, y) at x * n + y
    std::vector<std::pair<Vertex, Vertex>> representatives;  ///< smallest pair of each orbit
    std::vector<std::size_t> sizes;

    int pair_orbit_count() const { return static_cast<int>(representatives.size()); }
    int orbit_of(Vertex x, Vertex y) const { return pair_orbit[static_cast<std::size_t>(x * n + y)]; }
};

/// Every generator maps every edge to an edge.
bool verify_automorphisms(const Hypergraph& h, const PermGroup& g);

/// Throws InstanceTooLarge when n^2 exceeds `cap`.
OrbitStructure pair_orbits(const PermGroup& g, std::size_t cap = 10000000);

bool is_transitive(const PermGroup& g);

struct TransitiveResult {
    double value = 0.0;
    Eigen::MatrixXd a;              ///< invariant matrix with A(x0, x0) = 1
    ThetaCertificate link_certificate;  ///< row x0 inside theta of the link
    SolverDiagnostics diagnostics;
};

/// theta(H) for a group acting transitively by automorphisms: maximize
/// <J, A> / n over invariant PSD A with A(x0,x0) = 1 and the row of x0 in
/// theta of its link. Throws InputError when the group is not a transitive
/// subgroup of aut(H).
TransitiveResult theta_transitive(const Hypergraph& h, const PermGroup& g, Vertex x0 = 0,
                                  const SdpOptions& options = {});

/// Largest ratio gauge(A_x[V_x], theta(H_x)) / A(x, x) over all vertices x
/// with a nonempty link; at most 1 (up to solver accuracy) when every row of
/// A satisfies the link condition.
double max_row_gauge_ratio(const Hypergraph& h, const Eigen::MatrixXd& a, const SdpOptions& options = {});

struct InvariantMembership {
    bool member = false;
    bool reduced = false;  ///< decided by the scalar test
    double scalar = 0.0;   ///< c with f = c * 1 (reduced case)
    double theta = 0.0;    ///< theta(H) used by the scalar test
};

/// Membership of a group-invariant f. For a transitive group this is the
/// scalar test 0 <= c and c |V| <= theta(H) + tol; otherwise the full
/// membership program decides. Throws InputError when f is not invariant.
InvariantMembership invariant_membership_reduction(const Hypergraph& h, const PermGroup& g,
                                                   std::span<const double> f, double tol = 1e-7,
                                                   std::optional<double> theta_value = std::nullopt);

// ---------------------------------------------------------------------------
// Mantel hypergraphs: vertices are the edges of K_n (lexicographic order),
// edges are the triangles.

Hypergraph mantel_hypergraph(int n);
/// S_n acting on the edges of K_n, generated by (0 1) and (0 1 ... n-1).
PermGroup mantel_group(int n);
/// Index of the K_n edge {a, b} in the vertex order of mantel_hypergraph.
Vertex mantel_vertex(int n, int a, int b);

/// 0/1 matrices of the pair orbits "share one endpoint" and "disjoint".
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> mantel_orbit_matrices(int n);

/// theta of the link of any vertex of H_n, which is a perfect matching with
/// n - 2 edges.
inline long mantel_link_theta(int n) { return n - 2; }

struct MantelResult {
    Rational value;
    Rational alpha;
    Rational beta;
};

/// Exact optimum of the two-variable LP left after symmetry reduction.
MantelResult mantel_theta(int n);

}  // namespace hypertheta
