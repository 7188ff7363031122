#pragma once

// Combinatorial core: r-uniform hypergraphs on vertices 0..n-1, links,
// complements, cliques and the brute-force independence / fractional
// chromatic numbers used as oracles everywhere else.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "hypertheta/rational.hpp"

namespace hypertheta {

using Vertex = int;
/// Sorted list of distinct vertex indices.
using VertexSubset = std::vector<Vertex>;
using Edge = VertexSubset;
/// One real weight per vertex.
using WeightVector = std::vector<double>;

/// r-uniform hypergraph. Edges are kept sorted ascending, deduplicated, and
/// in lexicographic order, so lookups are binary searches.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<Edge> edges = {});

    int uniformity() const { return r_; }
    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    /// `e` must be sorted.
    bool has_edge(std::span<const Vertex> e) const;

    /// Edges containing `x`, in lexicographic order.
    std::vector<Edge> edges_containing(Vertex x) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
};

/// Link of a vertex, relabeled to 0..|V_x|-1; `vertices[i]` is the original
/// index of link vertex i.
struct Link {
    Hypergraph hypergraph;
    std::vector<Vertex> vertices;
};

Link link(const Hypergraph& h, Vertex x);

Hypergraph complement(const Hypergraph& h);

/// Sub-hypergraph induced on `subset` (sorted), relabeled in the order given.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> subset);

bool is_independent(const Hypergraph& h, std::span<const Vertex> subset);

/// Every r-subset of `subset` is an edge (vacuous below size r).
bool is_clique(const Hypergraph& h, std::span<const Vertex> subset);

inline constexpr int kAlphaCap = 24;
inline constexpr int kIndependentSetCap = 20;

struct AlphaResult {
    double value = 0.0;
    VertexSubset witness;
};

/// Exact weighted independence number by branch and bound.
AlphaResult alpha(const Hypergraph& h, std::span<const double> w, int cap = kAlphaCap);
AlphaResult alpha(const Hypergraph& h, int cap = kAlphaCap);

/// All independent sets, the empty set excluded, in lexicographic order.
std::vector<VertexSubset> enumerate_independent_sets(const Hypergraph& h, int cap = kIndependentSetCap);

/// Inclusion-maximal cliques.
std::vector<VertexSubset> enumerate_cliques(const Hypergraph& h, int cap = kIndependentSetCap);

/// 0 <= f <= 1 and f(C) <= r-1 for every maximal clique C, up to `tol`.
bool in_clique_polytope(const Hypergraph& h, std::span<const double> f, double tol = 1e-9,
                        int cap = kIndependentSetCap);

struct ChiStarResult {
    double value = 0.0;
    std::optional<Rational> exact;  ///< set by the rational solve
    /// Independent sets with positive coefficient.
    std::vector<std::pair<VertexSubset, double>> coloring;
};

/// Weighted fractional chromatic number min sum(lambda_I) subject to
/// sum lambda_I chi_I = w over all independent sets I.
ChiStarResult chi_star(const Hypergraph& h, std::span<const double> w, int cap = kIndependentSetCap);
ChiStarResult chi_star_exact(const Hypergraph& h, std::span<const Rational> w, int cap = kIndependentSetCap);

/// Each r-subset of [n] becomes an edge independently with probability p.
Hypergraph random_hypergraph(int r, int n, double p, std::mt19937_64& rng);

}  // namespace hypertheta
