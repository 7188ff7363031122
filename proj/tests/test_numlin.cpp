#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hypertheta/error.hpp"
#include "hypertheta/linalg.hpp"
#include "hypertheta/lp.hpp"
#include "hypertheta/rational.hpp"
#include "hypertheta/sdp.hpp"

using namespace hypertheta;

TEST_CASE("eigenvalues of a 2x2 matrix") {
    Eigen::MatrixXd m(2, 2);
    m << 2, 1, 1, 2;
    EigenDecomposition d = eig_sym(SymMatrix(m));
    CHECK(d.values(0) == doctest::Approx(1.0));
    CHECK(d.values(1) == doctest::Approx(3.0));
    Eigen::MatrixXd back = d.vectors * d.values.asDiagonal() * d.vectors.transpose();
    CHECK((back - m).norm() < 1e-12);
}

TEST_CASE("cycle adjacency spectrum") {
    const int n = 5;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) a(i, (i + 1) % n) = a((i + 1) % n, i) = 1;
    CHECK(min_eigenvalue(SymMatrix(a)) == doctest::Approx(2 * std::cos(4 * std::numbers::pi / 5)));
}

TEST_CASE("asymmetric input is rejected") {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 0, 1;
    CHECK_THROWS_AS(SymMatrix{m}, InputError);
    CHECK(std::isinf(min_eigenvalue(SymMatrix::zero(0))));
}

TEST_CASE("exact LP with inequality rows") {
    // max x + y, x + 2y <= 4, 3x + y <= 6
    LpProblem<Rational> p;
    p.objective = {1, 1};
    p.le_rows = {{1, 2}, {3, 1}};
    p.le_rhs = {4, 6};
    LpResult<Rational> r = solve_lp(p);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == Rational(14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    CHECK(r.x[1] == Rational(6, 5));
    CHECK(r.le_duals[0] == Rational(2, 5));
    CHECK(r.le_duals[1] == Rational(1, 5));
}

TEST_CASE("LP with equality rows, free and bounded variables") {
    LpProblem<Rational> p;
    p.objective = {1, -1};
    p.eq_rows = {{1, 1}};
    p.eq_rhs = {1};
    p.bounds = {{std::nullopt, Rational(3)}, {std::nullopt, std::nullopt}};
    LpResult<Rational> r = solve_lp(p);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == 5);
    CHECK(r.x[0] == 3);
    CHECK(r.x[1] == -2);
}

TEST_CASE("infeasible and unbounded LPs") {
    LpProblem<Rational> inf;
    inf.objective = {1};
    inf.le_rows = {{1}};
    inf.le_rhs = {-1};
    CHECK(solve_lp(inf).status == LpStatus::infeasible);

    LpProblem<double> unb;
    unb.objective = {1, 0};
    unb.le_rows = {{-1, 1}};
    unb.le_rhs = {1};
    CHECK(solve_lp(unb).status == LpStatus::unbounded);
}

TEST_CASE("floating LP matches exact LP on random instances") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(0, 9);
    for (int t = 0; t < 20; ++t) {
        LpProblem<Rational> pq;
        LpProblem<double> pd;
        for (int j = 0; j < 4; ++j) {
            int c = coef(rng);
            pq.objective.push_back(c);
            pd.objective.push_back(c);
        }
        for (int i = 0; i < 3; ++i) {
            std::vector<Rational> rq;
            std::vector<double> rd;
            for (int j = 0; j < 4; ++j) {
                int a = coef(rng) + 1;
                rq.push_back(a);
                rd.push_back(a);
            }
            pq.le_rows.push_back(rq);
            pd.le_rows.push_back(rd);
            pq.le_rhs.push_back(10);
            pd.le_rhs.push_back(10);
        }
        auto rq = solve_lp(pq);
        auto rd = solve_lp(pd);
        REQUIRE(rq.status == LpStatus::optimal);
        REQUIRE(rd.status == LpStatus::optimal);
        CHECK(rd.objective == doctest::Approx(to_double(rq.objective)).epsilon(1e-10));
    }
}

namespace {

// Lovasz theta of a graph: max <J, X>, tr X = 1, X_ij = 0 on edges.
SdpProblem lovasz(int n, const std::vector<std::pair<int, int>>& edges) {
    SdpProblem p({n});
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) p.add_objective(0, i, j, i == j ? 1.0 : 2.0);
    int tr = p.add_constraint(1.0);
    for (int i = 0; i < n; ++i) p.add_term(tr, 0, i, i, 1.0);
    for (auto [i, j] : edges) p.add_term(p.add_constraint(0.0), 0, i, j, 1.0);
    return p;
}

}  // namespace

TEST_CASE("SDP: Lovasz theta of the 5-cycle") {
    SdpSolution s = solve_sdp(lovasz(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
    REQUIRE(s.status == SdpStatus::optimal);
    CHECK(s.primal_objective == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
    CHECK(s.dual_objective == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
    CHECK(s.relative_gap <= 1e-8);
    CHECK(min_eigenvalue(SymMatrix(s.primal[0], 1e-9)) >= -1e-9);
}

TEST_CASE("SDP: complete and empty graphs") {
    SdpSolution k4 = solve_sdp(lovasz(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(k4.status == SdpStatus::optimal);
    CHECK(k4.primal_objective == doctest::Approx(1.0).epsilon(1e-7));
    SdpSolution e4 = solve_sdp(lovasz(4, {}));
    REQUIRE(e4.status == SdpStatus::optimal);
    CHECK(e4.primal_objective == doctest::Approx(4.0).epsilon(1e-7));
}

TEST_CASE("SDP: dependent constraints are dropped") {
    SdpProblem p = lovasz(3, {{0, 1}});
    int dup = p.add_constraint(0.0);
    p.add_term(dup, 0, 0, 1, 2.0);
    SdpSolution s = solve_sdp(p);
    REQUIRE(s.status == SdpStatus::optimal);
    CHECK(s.dropped_constraints == 1);
    CHECK(s.dual.size() == p.constraint_count());
    CHECK(s.primal_objective == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("SDP: infeasible problem") {
    // X PSD 1x1 with X = -1.
    SdpProblem p({1});
    p.add_objective(0, 0, 0, 1.0);
    p.add_term(p.add_constraint(-1.0), 0, 0, 0, 1.0);
    CHECK(solve_sdp(p).status == SdpStatus::infeasible);
}

TEST_CASE("SDP: several blocks") {
    // max x + y with x, y >= 0 as 1x1 blocks and x + y = 3, and a 2x2 block with trace 2.
    SdpProblem p({1, 1, 2});
    p.add_objective(0, 0, 0, 1.0);
    p.add_objective(1, 0, 0, 1.0);
    p.add_objective(2, 0, 1, 2.0);
    int c = p.add_constraint(3.0);
    p.add_term(c, 0, 0, 0, 1.0);
    p.add_term(c, 1, 0, 0, 1.0);
    int t = p.add_constraint(2.0);
    p.add_term(t, 2, 0, 0, 1.0);
    p.add_term(t, 2, 1, 1, 1.0);
    SdpSolution s = solve_sdp(p);
    REQUIRE(s.status == SdpStatus::optimal);
    CHECK(s.primal_objective == doctest::Approx(5.0).epsilon(1e-7));
    for (int k = 0; k < p.constraint_count(); ++k) CHECK(std::abs(p.residual(k, s.primal)) < 1e-7);
}
