#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hypertheta/cli.hpp"
#include "hypertheta/error.hpp"
#include "hypertheta/hamming.hpp"
#include "hypertheta/hoffman.hpp"
#include "hypertheta/linalg.hpp"
#include "hypertheta/lp.hpp"
#include "hypertheta/symmetry.hpp"
#include "hypertheta/theta.hpp"

namespace hypertheta::cli {

namespace {

class Recorder {
public:
    void add(std::string module, std::string name, const std::function<std::string()>& body) {
        CheckOutcome o{std::move(module), std::move(name), false, ""};
        try {
            o.detail = body();
            o.passed = o.detail.empty();
        } catch (const std::exception& e) {
            o.detail = std::string("exception: ") + e.what();
        }
        outcomes.push_back(std::move(o));
    }
    std::vector<CheckOutcome> outcomes;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

WeightVector random_weights(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    WeightVector w(static_cast<std::size_t>(n));
    for (double& x : w) x = u(rng);
    return w;
}

}  // namespace

std::vector<CheckOutcome> run_property_checks(unsigned long long seed) {
    Recorder rec;
    std::mt19937_64 rng(seed);

    rec.add("hypercore", "complement is an involution", [&] {
        for (int i = 0; i < 20; ++i) {
            Hypergraph h = random_hypergraph(2 + i % 3, 6, 0.4, rng);
            if (complement(complement(h)) != h) return std::string("mismatch");
        }
        return std::string();
    });
    rec.add("hypercore", "cliques are independent sets of the complement", [&] {
        for (int i = 0; i < 10; ++i) {
            Hypergraph h = random_hypergraph(3, 7, 0.6, rng);
            auto cliques = enumerate_cliques(h);
            auto indep = enumerate_independent_sets(complement(h));
            std::set<VertexSubset> maximal;
            for (const auto& s : indep) {
                bool is_max = true;
                for (Vertex v = 0; v < h.order() && is_max; ++v) {
                    if (std::binary_search(s.begin(), s.end(), v)) continue;
                    VertexSubset t = s;
                    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
                    if (is_independent(complement(h), t)) is_max = false;
                }
                if (is_max) maximal.insert(s);
            }
            if (std::set<VertexSubset>(cliques.begin(), cliques.end()) != maximal) return std::string("mismatch");
        }
        return std::string();
    });
    rec.add("hypercore", "link round trip", [&] {
        for (int i = 0; i < 10; ++i) {
            Hypergraph h = random_hypergraph(3, 7, 0.3, rng);
            for (Vertex x = 0; x < h.order(); ++x) {
                Link l = link(h, x);
                std::set<Edge> back, expected;
                for (const Edge& e : l.hypergraph.edges()) {
                    Edge o;
                    for (Vertex y : e) o.push_back(l.vertices[static_cast<std::size_t>(y)]);
                    back.insert(o);
                }
                for (const Edge& e : h.edges_containing(x)) {
                    Edge o;
                    for (Vertex y : e)
                        if (y != x) o.push_back(y);
                    expected.insert(o);
                }
                if (back != expected) return std::string("mismatch");
            }
        }
        return std::string();
    });

    rec.add("numlin", "eigendecomposition reconstruction", [&] {
        std::normal_distribution<double> g;
        for (int n : {1, 3, 8, 20}) {
            Eigen::MatrixXd m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = g(rng);
            EigenDecomposition e = eig_sym(SymMatrix(m));
            double rec_err = (e.vectors * e.values.asDiagonal() * e.vectors.transpose() - m).norm();
            double orth = (e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
            if (rec_err > 1e-9 * (1 + m.norm()) || orth > 1e-9) return fmt("error %g / %g", rec_err, orth);
        }
        return std::string();
    });
    rec.add("numlin", "SDP weak duality", [&] {
        for (int i = 0; i < 10; ++i) {
            Hypergraph h = random_hypergraph(2, 7, 0.4, rng);
            SdpProblem p = assemble_theta_sdp(h, random_weights(7, rng));
            SdpSolution s = solve_sdp(p);
            if (s.status != SdpStatus::optimal) return std::string("solver did not converge");
            if (s.primal_objective > s.dual_objective + 1e-8 * (1 + std::abs(s.dual_objective)))
                return fmt("primal %.12g above dual %.12g", s.primal_objective, s.dual_objective);
        }
        return std::string();
    });

    rec.add("thetabody", "alpha <= theta <= (r-1) chi*(complement)", [&] {
        for (int i = 0; i < 20; ++i) {
            int n = 5 + i % 4;
            Hypergraph h = random_hypergraph(3, n, 0.5, rng);
            WeightVector w = random_weights(n, rng);
            double a = alpha(h, w).value, t = theta(h, w).value, c = chi_star(complement(h), w).value;
            if (a > t + 1e-6 || t > 2 * c + 1e-6) return fmt("alpha/theta violation theta=%g chi*=%g", t, c);
        }
        return std::string();
    });
    rec.add("thetabody", "negative weights are ignored", [&] {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 10; ++i) {
            Hypergraph h = random_hypergraph(3, 6, 0.5, rng);
            WeightVector w(6), wp(6);
            for (int v = 0; v < 6; ++v) wp[static_cast<std::size_t>(v)] = std::max(0.0, w[static_cast<std::size_t>(v)] = u(rng));
            double d = std::abs(theta(h, w).value - theta(h, wp).value);
            if (d > 1e-6) return fmt("difference %g", d);
        }
        return std::string();
    });
    rec.add("thetabody", "scaling", [&] {
        Hypergraph h = random_hypergraph(3, 6, 0.5, rng);
        WeightVector w = random_weights(6, rng), w3 = w;
        for (double& x : w3) x *= 3.0;
        double a = theta(h, w).value, b = theta(h, w3).value;
        return std::abs(b - 3 * a) <= 1e-7 * (1 + std::abs(b)) ? std::string() : fmt("%g vs %g", b, 3 * a);
    });
    rec.add("thetabody", "duality product", [&] {
        for (int i = 0; i < 10; ++i) {
            Hypergraph h = random_hypergraph(3, 6, 0.5, rng);
            WeightVector l = random_weights(6, rng), w = random_weights(6, rng);
            double lhs = theta(h, l).value * theta_dual(complement(h), w).value;
            double dot = antiblocker_probe(l, w);
            if (lhs < dot - 1e-6) return fmt("product %g below %g", lhs, dot);
        }
        return std::string();
    });
    rec.add("thetabody", "integer points are independent sets", [&] {
        Hypergraph h = random_hypergraph(3, 6, 0.4, rng);
        for (int mask = 0; mask < 64; ++mask) {
            WeightVector f(6);
            VertexSubset s;
            for (int v = 0; v < 6; ++v)
                if (mask >> v & 1) {
                    f[static_cast<std::size_t>(v)] = 1.0;
                    s.push_back(v);
                }
            if (theta_membership(h, f).member != is_independent(h, s)) return fmt("mask %g", mask);
        }
        return std::string();
    });

    rec.add("symmetry", "Johnson eigenvalues of the Mantel orbit matrices", [&] {
        for (int n = 4; n <= 8; ++n) {
            auto [a1, a2] = mantel_orbit_matrices(n);
            Eigen::VectorXd e1 = eig_sym(SymMatrix(a1)).values;
            Eigen::VectorXd e2 = eig_sym(SymMatrix(a2)).values;
            std::set<long> s1, s2;
            for (Eigen::Index i = 0; i < e1.size(); ++i) {
                s1.insert(std::lround(e1(i)));
                s2.insert(std::lround(e2(i)));
                if (std::abs(e1(i) - std::round(e1(i))) > 1e-9 || std::abs(e2(i) - std::round(e2(i))) > 1e-9)
                    return std::string("non-integral eigenvalue");
            }
            std::set<long> x1{-2, n - 4, 2 * n - 4}, x2{1, -(n - 3), (n - 2) * (n - 3) / 2};
            if (s1 != x1 || s2 != x2) return fmt("n=%g", n);
        }
        return std::string();
    });
    rec.add("symmetry", "floor of the Mantel value is alpha", [&] {
        for (int n = 4; n <= 6; ++n) {
            Rational v = mantel_theta(n).value;
            BigInt fl = v.get_num() / v.get_den();
            if (Rational(fl) != Rational(alpha(mantel_hypergraph(n)).value)) return fmt("n=%g", n);
        }
        return std::string();
    });
    rec.add("symmetry", "transitive reduction matches the generic program", [&] {
        for (int n = 4; n <= 5; ++n) {
            Hypergraph h = mantel_hypergraph(n);
            double a = theta_transitive(h, mantel_group(n)).value, b = theta(h).value;
            if (std::abs(a - b) > 1e-5) return fmt("%g vs %g", a, b);
        }
        return std::string();
    });

    rec.add("hamming", "Krawtchouk orthogonality", [&] {
        for (int n = 1; n <= 12; ++n)
            for (int k = 0; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (krawtchouk_inner(n, k, l) != 0) return fmt("n=%g", n);
        return std::string();
    });
    rec.add("hamming", "Hahn orthogonality", [&] {
        for (int n = 1; n <= 8; ++n)
            for (int s = 0; s <= n; ++s)
                for (int k = 0; k <= std::min(s, n - s); ++k)
                    for (int l = k + 1; l <= std::min(s, n - s); ++l)
                        if (hahn_inner(n, s, k, l) != 0) return fmt("n=%g s=%g", n, s);
        return std::string();
    });
    rec.add("hamming", "closed forms equal their LPs", [&] {
        for (int n = 3; n <= 16; ++n)
            for (int s = 2; s <= 2 * n / 3; s += 2) {
                HammingLp lp = theta_hamming_lp(n, s);
                if (lp.value != theta_hamming(n, s)) return fmt("triangle LP n=%g s=%g", n, s);
                if (lp.a_at_s < 0) return fmt("omitted constraint active n=%g s=%g", n, s);
                if (theta_hamming_link_lp(n, s).value != theta_hamming_link(n, s)) return fmt("link LP n=%g s=%g", n, s);
            }
        return std::string();
    });
    rec.add("hamming", "theta bounds alpha", [&] {
        for (int n = 3; n <= 4; ++n) {
            Hypergraph h = build_hamming_hypergraph(n, 2);
            if (alpha(h).value > to_double(theta_hamming(n, 2)) + 1e-9) return fmt("n=%g", n);
        }
        return std::string();
    });

    rec.add("hoffman", "alpha <= theta(H, mu1) <= hoff", [&] {
        for (int i = 0; i < 20; ++i) {
            WeightedHypergraph x = random_weighted_hypergraph(3, 5 + i % 4, i % 2 ? 0.3 : 0.5, rng);
            HoffmanReport r = hoffman_report(x);
            if (*r.alpha > r.theta + 1e-6 || r.theta > r.hoff + 1e-6) return fmt("theta %g hoff %g", r.theta, r.hoff);
        }
        return std::string();
    });
    rec.add("hoffman", "adjacency operator invariants", [&] {
        for (int i = 0; i < 20; ++i) {
            WeightedHypergraph x = random_weighted_hypergraph(3, 6, 0.5, rng);
            AdjacencyOperator op = adjacency_operator(x);
            const int n = x.order();
            for (int a = 0; a < n; ++a) {
                Rational row = 0;
                for (int b = 0; b < n; ++b) {
                    row += op.exact[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    if (op.mu1[static_cast<std::size_t>(a)] * op.exact[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                        op.mu1[static_cast<std::size_t>(b)] * op.exact[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                        return std::string("not self-adjoint");
                }
                if (row != 1 || op.exact[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] != 0)
                    return std::string("row sum or trace");
            }
            if (smallest_eigenvalue(x) >= 0) return std::string("nonnegative smallest eigenvalue");
        }
        return std::string();
    });
    return rec.outcomes;
}

}  // namespace hypertheta::cli
