#pragma once

// Edge-weighted hypergraphs X = (V, mu), their induced measures and links,
// the normalized adjacency operator and the high-dimensional Hoffman bound
// hoff(X) = 1 - 1 / prod_i (1 - lambda_i(X)).

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hypertheta/hypergraph.hpp"
#include "hypertheta/rational.hpp"

namespace hypertheta {

/// Probability measure on the edges of an r-uniform hypergraph. Vertices
/// outside every positive-weight edge are dropped; `original(v)` maps a
/// retained vertex back to its input index.
class WeightedHypergraph {
public:
    /// Weights are nonnegative and normalized to sum 1; zero-weight edges are
    /// removed. Throws InputError when no positive weight remains.
    WeightedHypergraph(int r, int n, std::vector<Edge> edges, std::vector<Rational> weights);

    int uniformity() const { return r_; }
    int order() const { return static_cast<int>(original_.size()); }
    int input_order() const { return input_n_; }
    Vertex original(Vertex v) const { return original_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& original_vertices() const { return original_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Rational>& measure() const { return mu_; }

    /// Support hypergraph on the retained vertices.
    Hypergraph underlying() const { return Hypergraph(r_, order(), edges_); }

private:
    int r_;
    int input_n_;
    std::vector<Vertex> original_;
    std::vector<Edge> edges_;  // sorted, aligned with mu_
    std::vector<Rational> mu_;
};

/// mu^(i)(sigma) = mu({e : sigma in e}) / C(r, i) for the i-subsets with
/// positive mass, in lexicographic order. Requires 1 <= i <= r - 1.
std::vector<std::pair<VertexSubset, Rational>> induced_measure(const WeightedHypergraph& x, int i);

/// mu^(1) as one value per retained vertex.
std::vector<Rational> vertex_measure(const WeightedHypergraph& x);

/// (r - |sigma|)-uniform link with mu_sigma(e) = mu(e u sigma) / mu({e' : sigma in e'}).
/// `original` of the result refers to vertices of `x`.
WeightedHypergraph link_measure(const WeightedHypergraph& x, const VertexSubset& sigma);

struct AdjacencyOperator {
    std::vector<std::vector<Rational>> exact;  ///< T(x, y) = mu^(2)({x,y}) / (2 mu^(1)(x))
    Eigen::MatrixXd t;
    std::vector<Rational> mu1;
};

AdjacencyOperator adjacency_operator(const WeightedHypergraph& x);

/// Smallest eigenvalue of T_X, computed on D^(1/2) T D^(-1/2).
double smallest_eigenvalue(const WeightedHypergraph& x);

inline constexpr std::size_t kLinkCap = 1000000;

/// (lambda_0, ..., lambda_{r-2}); lambda_i is the minimum of lambda over all
/// i-links with positive mass.
std::vector<double> lambda_levels(const WeightedHypergraph& x, std::size_t cap = kLinkCap);

double hoff(const std::vector<double>& levels);
double hoff(const WeightedHypergraph& x);

struct HoffmanReport {
    std::vector<double> levels;
    double hoff = 0.0;
    double theta = 0.0;           ///< theta(H, mu^(1))
    std::optional<double> alpha;  ///< alpha(H, mu^(1)) when within the brute-force cap
};

/// Computes the chain alpha(X) <= theta(H, mu^(1)) <= hoff(X).
HoffmanReport hoffman_report(const WeightedHypergraph& x);

/// Uniform measure on a random edge set: each r-subset of [n] is an edge
/// with probability p. Redraws until at least one edge exists.
WeightedHypergraph random_weighted_hypergraph(int r, int n, double p, std::mt19937_64& rng);

}  // namespace hypertheta
