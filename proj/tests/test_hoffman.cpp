#include "doctest.h"

#include <random>

#include "hypertheta/error.hpp"
#include "hypertheta/hoffman.hpp"
#include "hypertheta/symmetry.hpp"

using namespace hypertheta;

// Reference values come from tests/oracles/oracle.py.

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

WeightedHypergraph sample() {
    return WeightedHypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}, {1, 2, 4}, {0, 3, 4}},
                              {Rational(1), Rational(2), Rational(3), Rational(4)});
}

}  // namespace

TEST_CASE("weights are normalized and empty vertices dropped") {
    WeightedHypergraph x(3, 6, {{0, 1, 2}, {1, 2, 5}, {0, 2, 5}}, {Rational(2), Rational(0), Rational(6)});
    CHECK(x.input_order() == 6);
    CHECK(x.order() == 4);
    CHECK(x.original_vertices() == std::vector<Vertex>{0, 1, 2, 5});
    CHECK(x.edges().size() == 2);
    CHECK(x.measure() == std::vector<Rational>{q(1, 4), q(3, 4)});
    CHECK_THROWS_AS(WeightedHypergraph(3, 3, {{0, 1, 2}}, {Rational(0)}), InputError);
    CHECK_THROWS_AS(WeightedHypergraph(3, 3, {{0, 1, 2}}, {Rational(-1)}), InputError);
}

TEST_CASE("induced measures are probability measures") {
    WeightedHypergraph x = sample();
    for (int i = 1; i <= 2; ++i) {
        Rational total = 0;
        for (const auto& [s, m] : induced_measure(x, i)) total += m;
        CHECK(total == 1);
    }
    std::vector<Rational> mu1 = vertex_measure(x);
    CHECK(mu1[0] == q(7, 30));
    CHECK(mu1[4] == q(7, 30));
    CHECK_THROWS_AS(induced_measure(x, 3), InputError);
}

TEST_CASE("link measures") {
    WeightedHypergraph l = link_measure(sample(), {0});
    CHECK(l.uniformity() == 2);
    Rational total = 0;
    for (const Rational& m : l.measure()) total += m;
    CHECK(total == 1);
    CHECK(l.edges().size() == 3);
}

TEST_CASE("adjacency operator is a random walk") {
    AdjacencyOperator a = adjacency_operator(sample());
    for (const auto& row : a.exact) {
        Rational s = 0;
        for (const Rational& v : row) s += v;
        CHECK(s == 1);
    }
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(a.t.rows());
    CHECK((a.t * ones - ones).norm() < 1e-12);
}

TEST_CASE("levels and bound for a single edge") {
    WeightedHypergraph x(3, 3, {{0, 1, 2}}, {Rational(1)});
    std::vector<double> levels = lambda_levels(x);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0] == doctest::Approx(-0.5));
    CHECK(levels[1] == doctest::Approx(-1.0));
    CHECK(hoff(x) == doctest::Approx(2.0 / 3));
}

TEST_CASE("reference bounds") {
    CHECK(hoff(sample()) == doctest::Approx(2.0 / 3));
    Hypergraph m5 = mantel_hypergraph(5);
    WeightedHypergraph x(3, 10, m5.edges(), std::vector<Rational>(m5.edge_count(), Rational(1)));
    std::vector<double> levels = lambda_levels(x);
    CHECK(levels[0] == doctest::Approx(-1.0 / 3));
    CHECK(levels[1] == doctest::Approx(-1.0));
    CHECK(hoff(x) == doctest::Approx(0.625));
}

TEST_CASE("graphs: hoff matches the Hoffman ratio bound") {
    WeightedHypergraph c5(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, std::vector<Rational>(5, Rational(1)));
    double lambda = std::cos(4 * std::acos(-1.0) / 5);
    CHECK(smallest_eigenvalue(c5) == doctest::Approx(lambda));
    CHECK(hoff(c5) == doctest::Approx(-lambda / (1 - lambda)));
    HoffmanReport rep = hoffman_report(c5);
    CHECK(rep.theta == doctest::Approx(std::sqrt(5.0) / 5).epsilon(1e-7));
    CHECK(rep.hoff == doctest::Approx(std::sqrt(5.0) / 5).epsilon(1e-9));
}

TEST_CASE("alpha <= theta <= hoff on random instances") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 25; ++t) {
        WeightedHypergraph x = random_weighted_hypergraph(3, 6, 0.5, rng);
        HoffmanReport rep = hoffman_report(x);
        REQUIRE(rep.alpha);
        CHECK(*rep.alpha <= rep.theta + 1e-6);
        CHECK(rep.theta <= rep.hoff + 1e-6);
    }
}
