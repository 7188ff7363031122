#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "hypertheta/error.hpp"
#include "hypertheta/hypergraph.hpp"
#include "hypertheta/io.hpp"
#include "hypertheta/symmetry.hpp"

using namespace hypertheta;

namespace {

Hypergraph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return Hypergraph(2, n, e);
}

// Brute-force independence number over all subsets.
int alpha_brute(const Hypergraph& h) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << h.order()); ++mask) {
        VertexSubset s;
        for (int v = 0; v < h.order(); ++v)
            if (mask >> v & 1u) s.push_back(v);
        if (is_independent(h, s)) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("edges are normalized and duplicates dropped") {
    Hypergraph h(3, 5, {{2, 1, 0}, {0, 1, 2}, {1, 3, 4}});
    CHECK(h.edge_count() == 2);
    CHECK(h.edges()[0] == Edge{0, 1, 2});
    CHECK(h.has_edge(Edge{1, 3, 4}));
    CHECK_FALSE(h.has_edge(Edge{0, 1, 3}));
}

TEST_CASE("invalid edges are rejected") {
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1}}), InputError);
    CHECK_THROWS_AS(Hypergraph(2, 4, {{0, 4}}), InputError);
    CHECK_THROWS_AS(Hypergraph(2, 4, {{1, 1}}), InputError);
}

TEST_CASE("link of a vertex") {
    Hypergraph h(3, 5, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}});
    Link l = link(h, 0);
    CHECK(l.hypergraph.uniformity() == 2);
    CHECK(l.vertices == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(l.hypergraph.edge_count() == 2);
    CHECK(l.hypergraph.has_edge(Edge{0, 1}));
    CHECK(l.hypergraph.has_edge(Edge{2, 3}));
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        Hypergraph h = random_hypergraph(3, 6, 0.4, rng);
        Hypergraph c = complement(h);
        CHECK(c.edge_count() + h.edge_count() == 20);
        CHECK(complement(c) == h);
    }
}

TEST_CASE("alpha of small graphs") {
    CHECK(alpha(cycle_graph(5)).value == 2);
    CHECK(alpha(Hypergraph(3, 3, {{0, 1, 2}})).value == 2);
    CHECK(alpha(Hypergraph(3, 4)).value == 4);
    CHECK(alpha(mantel_hypergraph(4)).value == 4);
    WeightVector w{1, 5, 1, 1, 1};
    CHECK(alpha(cycle_graph(5), w).value == 6);
}

TEST_CASE("alpha agrees with brute force on random hypergraphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Hypergraph h = random_hypergraph(3, 8, 0.3, rng);
        AlphaResult a = alpha(h);
        CHECK(a.value == alpha_brute(h));
        CHECK(is_independent(h, a.witness));
    }
}

TEST_CASE("alpha rejects instances past the cap") {
    CHECK_THROWS_AS(alpha(Hypergraph(2, 30)), InstanceTooLarge);
}

TEST_CASE("independent sets and cliques") {
    Hypergraph k3(2, 3, {{0, 1}, {0, 2}, {1, 2}});
    auto ind = enumerate_independent_sets(k3);
    CHECK(ind.size() == 3);
    auto cl = enumerate_cliques(k3);
    REQUIRE(cl.size() == 1);
    CHECK(cl[0] == VertexSubset{0, 1, 2});
    CHECK(is_clique(k3, VertexSubset{0, 1, 2}));
}

TEST_CASE("clique polytope") {
    Hypergraph k3(2, 3, {{0, 1}, {0, 2}, {1, 2}});
    WeightVector third{1.0 / 3, 1.0 / 3, 1.0 / 3};
    WeightVector half{0.5, 0.5, 0.5};
    CHECK(in_clique_polytope(k3, third));
    CHECK_FALSE(in_clique_polytope(k3, half));
}

TEST_CASE("fractional chromatic number") {
    std::vector<Rational> ones5(5, Rational(1));
    ChiStarResult c5 = chi_star_exact(cycle_graph(5), ones5);
    REQUIRE(c5.exact);
    CHECK(*c5.exact == Rational(5, 2));

    Hypergraph k3(2, 3, {{0, 1}, {0, 2}, {1, 2}});
    std::vector<Rational> ones3(3, Rational(1));
    CHECK(*chi_star_exact(k3, ones3).exact == 3);

    WeightVector w(5, 1.0);
    ChiStarResult f = chi_star(cycle_graph(5), w);
    CHECK(f.value == doctest::Approx(2.5).epsilon(1e-12));
    WeightVector cover(5, 0.0);
    for (const auto& [set, lam] : f.coloring)
        for (Vertex v : set) cover[static_cast<std::size_t>(v)] += lam;
    for (double c : cover) CHECK(c == doctest::Approx(1.0));
}

TEST_CASE("hypergraph text round trip") {
    Hypergraph h(3, 5, {{0, 1, 2}, {1, 3, 4}});
    std::ostringstream out;
    write_hypergraph(out, h);
    std::istringstream in("# comment\n" + out.str());
    CHECK(read_hypergraph(in) == h);
}

TEST_CASE("format errors carry line and column") {
    auto fails_at = [](const std::string& text, int line, int column) {
        std::istringstream in(text);
        try {
            read_hypergraph(in);
        } catch (const FormatError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("no FormatError for: " << text);
    };
    fails_at("3 4 1\n0 1 x\n", 2, 5);
    fails_at("3 4 1\n0 1 4\n", 2, 5);
    fails_at("3 4 1\n0 2 1\n", 2, 5);
    fails_at("3 4\n", 1, 1);
    fails_at("2 4 2\n0 1\n", 3, 1);
    fails_at("2 4 1\n0  1\n", 2, 3);
}

TEST_CASE("weight files") {
    std::istringstream ok("1/2\n# skip\n3\n");
    auto w = read_weights_exact(ok, 2);
    CHECK(w[0] == Rational(1, 2));
    CHECK(w[1] == 3);
    std::istringstream shortfile("1\n");
    CHECK_THROWS_AS(read_weights_exact(shortfile, 2), FormatError);
}

TEST_CASE("weighted edge lists") {
    std::istringstream in("2 3 2\n0 1 2\n1 2 1/3\n");
    WeightedEdgeList l = read_weighted_edges(in);
    CHECK(l.edges.size() == 2);
    CHECK(l.weights[1] == Rational(1, 3));
    std::istringstream neg("2 3 1\n0 1 -1\n");
    CHECK_THROWS_AS(read_weighted_edges(neg), FormatError);
}
