#include "hypertheta/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "hypertheta/error.hpp"
#include "hypertheta/lp.hpp"

namespace hypertheta {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree < 0) throw InputError("group degree must be nonnegative");
    for (const Permutation& p : generators_) {
        if (static_cast<int>(p.size()) != degree) throw InputError("generator has wrong degree");
        std::vector<char> seen(static_cast<std::size_t>(degree), 0);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
                throw InputError("generator is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
    Permutation id(static_cast<std::size_t>(degree_));
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation> out{id};
    std::set<Permutation> seen{id};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const Permutation& g : generators_) {
            Permutation next(static_cast<std::size_t>(degree_));
            for (int x = 0; x < degree_; ++x)
                next[static_cast<std::size_t>(x)] = g[static_cast<std::size_t>(out[i][static_cast<std::size_t>(x)])];
            if (seen.insert(next).second) {
                if (out.size() >= cap) throw InstanceTooLarge("group has more than " + std::to_string(cap) + " elements");
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

bool verify_automorphisms(const Hypergraph& h, const PermGroup& g) {
    if (g.degree() != h.order()) return false;
    Edge image(static_cast<std::size_t>(h.uniformity()));
    for (const Permutation& p : g.generators()) {
        for (const Edge& e : h.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) image[i] = p[static_cast<std::size_t>(e[i])];
            std::sort(image.begin(), image.end());
            if (!h.has_edge(image)) return false;
        }
    }
    return true;
}

OrbitStructure pair_orbits(const PermGroup& g, std::size_t cap) {
    const int n = g.degree();
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (nn > cap) throw InstanceTooLarge("pair orbit computation exceeds the cap of " + std::to_string(cap) + " pairs");
    UnionFind vertices(static_cast<std::size_t>(n));
    UnionFind pairs(nn);
    for (const Permutation& p : g.generators()) {
        for (int x = 0; x < n; ++x) {
            vertices.unite(x, p[static_cast<std::size_t>(x)]);
            for (int y = 0; y < n; ++y)
                pairs.unite(x * n + y, p[static_cast<std::size_t>(x)] * n + p[static_cast<std::size_t>(y)]);
        }
    }
    OrbitStructure out;
    out.n = n;
    out.vertex_orbit.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        int r = vertices.find(x);
        if (id_of_root[static_cast<std::size_t>(r)] < 0) {
            id_of_root[static_cast<std::size_t>(r)] = static_cast<int>(out.vertex_orbits.size());
            out.vertex_orbits.emplace_back();
        }
        int id = id_of_root[static_cast<std::size_t>(r)];
        out.vertex_orbit[static_cast<std::size_t>(x)] = id;
        out.vertex_orbits[static_cast<std::size_t>(id)].push_back(x);
    }
    out.pair_orbit.assign(nn, -1);
    std::vector<int> pair_id(nn, -1);
    for (std::size_t k = 0; k < nn; ++k) {
        int r = pairs.find(static_cast<int>(k));
        if (pair_id[static_cast<std::size_t>(r)] < 0) {
            pair_id[static_cast<std::size_t>(r)] = static_cast<int>(out.representatives.size());
            out.representatives.emplace_back(static_cast<int>(k) / n, static_cast<int>(k) % n);
            out.sizes.push_back(0);
        }
        int id = pair_id[static_cast<std::size_t>(r)];
        out.pair_orbit[k] = id;
        ++out.sizes[static_cast<std::size_t>(id)];
    }
    return out;
}

bool is_transitive(const PermGroup& g) {
    if (g.degree() <= 1) return true;
    UnionFind uf(static_cast<std::size_t>(g.degree()));
    for (const Permutation& p : g.generators())
        for (int x = 0; x < g.degree(); ++x) uf.unite(x, p[static_cast<std::size_t>(x)]);
    for (int x = 0; x < g.degree(); ++x)
        if (uf.find(x) != 0) return false;
    return true;
}

TransitiveResult theta_transitive(const Hypergraph& h, const PermGroup& g, Vertex x0, const SdpOptions& options) {
    const int n = h.order();
    if (n == 0) throw InputError("theta_transitive needs at least one vertex");
    if (x0 < 0 || x0 >= n) throw InputError("base vertex out of range");
    if (h.uniformity() < 2) throw UniformityTooSmall("theta_transitive needs uniformity at least 2");
    if (!verify_automorphisms(h, g)) throw InputError("group does not act by automorphisms");
    if (!is_transitive(g)) throw InputError("group is not transitive on the vertices");
    OrbitStructure orbits = pair_orbits(g);

    SdpProblem p;
    const int a = p.add_block(n);
    int c = p.add_constraint(1.0);
    p.add_term(c, a, x0, x0, 1.0);

    // Entries (x, y), x <= y, are identified with the representative entry
    // of their orbit; transposed orbits are merged since A is symmetric.
    auto entry = [n](int x, int y) { return std::min(x, y) * n + std::max(x, y); };
    UnionFind same(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            auto [rx, ry] = orbits.representatives[static_cast<std::size_t>(orbits.orbit_of(x, y))];
            same.unite(entry(x, y), entry(rx, ry));
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            int root = same.find(entry(x, y));
            if (root == entry(x, y)) continue;
            c = p.add_constraint(0.0);
            p.add_term(c, a, x, y, 1.0);
            p.add_term(c, a, root / n, root % n, -1.0);
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) p.add_objective(a, x, y, (x == y ? 1.0 : 2.0) / n);

    Link l = link(h, x0);
    NodeLayout link_layout;
    if (l.hypergraph.order() > 0) {
        std::vector<ScalarRef> refs;
        for (Vertex y : l.vertices) refs.push_back(ScalarRef{a, x0, y});
        link_layout = add_theta_node(p, l.hypergraph, ScalarRef{a, x0, x0}, refs);
        link_layout.vertices = l.vertices;
    }

    SdpSolution sol = solve_sdp(p, options);
    TransitiveResult out;
    out.diagnostics = diagnostics_of(p, sol);
    if (sol.status != SdpStatus::optimal)
        throw SolverError("theta_transitive: SDP " + std::string(to_string(sol.status)) +
                          (sol.message.empty() ? "" : ": " + sol.message));
    out.value = sol.primal_objective;
    out.a = sol.primal[static_cast<std::size_t>(a)];
    if (l.hypergraph.order() > 0) out.link_certificate = extract_certificate(link_layout, sol.primal);
    return out;
}

double max_row_gauge_ratio(const Hypergraph& h, const Eigen::MatrixXd& a, const SdpOptions& options) {
    double worst = 0.0;
    for (Vertex x = 0; x < h.order(); ++x) {
        Link l = link(h, x);
        if (l.hypergraph.order() == 0) continue;
        WeightVector row;
        for (Vertex y : l.vertices) row.push_back(std::max(0.0, a(x, y)));
        GaugeResult g = theta_gauge(l.hypergraph, row, options);
        if (a(x, x) <= 0.0) {
            if (g.value > 0.0) return std::numeric_limits<double>::infinity();
            continue;
        }
        worst = std::max(worst, g.value / a(x, x));
    }
    return worst;
}

InvariantMembership invariant_membership_reduction(const Hypergraph& h, const PermGroup& g,
                                                   std::span<const double> f, double tol,
                                                   std::optional<double> theta_value) {
    if (static_cast<int>(f.size()) != h.order()) throw InputError("weight vector length does not match vertex count");
    if (g.degree() != h.order()) throw InputError("group degree does not match vertex count");
    if (!verify_automorphisms(h, g)) throw InputError("group does not act by automorphisms");
    for (const Permutation& p : g.generators())
        for (int x = 0; x < h.order(); ++x)
            if (std::abs(f[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])] - f[static_cast<std::size_t>(x)]) >
                1e-12 * (1.0 + std::abs(f[static_cast<std::size_t>(x)])))
                throw InputError("vector is not invariant under the group");
    InvariantMembership out;
    if (!is_transitive(g) || h.order() == 0 || h.uniformity() < 2) {
        out.member = theta_membership(h, f, tol).member;
        return out;
    }
    out.reduced = true;
    out.scalar = f[0];
    if (out.scalar < -tol) return out;
    out.theta = theta_value ? *theta_value : theta_transitive(h, g).value;
    out.member = out.scalar * h.order() <= out.theta + tol;
    return out;
}

Vertex mantel_vertex(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || a == b) throw InputError("not an edge of K_n");
    // Edges {a, b} in lexicographic order: a rows of decreasing length.
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Hypergraph mantel_hypergraph(int n) {
    if (n < 2) throw InputError("mantel hypergraph needs n >= 2");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                edges.push_back({mantel_vertex(n, a, b), mantel_vertex(n, a, c), mantel_vertex(n, b, c)});
    return Hypergraph(3, n * (n - 1) / 2, std::move(edges));
}

PermGroup mantel_group(int n) {
    if (n < 2) throw InputError("mantel group needs n >= 2");
    std::vector<int> swap01(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    const int m = n * (n - 1) / 2;
    std::vector<Permutation> gens;
    for (const auto& s : {swap01, cycle}) {
        Permutation p(static_cast<std::size_t>(m));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                p[static_cast<std::size_t>(mantel_vertex(n, a, b))] =
                    mantel_vertex(n, s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
        gens.push_back(std::move(p));
    }
    return PermGroup(m, std::move(gens));
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> mantel_orbit_matrices(int n) {
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(m, m), a2 = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto [a, b] = pairs[static_cast<std::size_t>(i)];
            auto [c, d] = pairs[static_cast<std::size_t>(j)];
            int common = (a == c) + (a == d) + (b == c) + (b == d);
            (common == 1 ? a1 : a2)(i, j) = 1.0;
        }
    }
    return {a1, a2};
}

MantelResult mantel_theta(int n) {
    if (n < 4) throw InputError("mantel_theta needs n >= 4");
    const Rational nn(n);
    // A = I + alpha A_1 + beta A_2 with eigenvalue rows of the Johnson scheme.
    const Rational r1 = 2 * (nn - 2);                 // |R_1| / |V|
    const Rational r2 = (nn - 2) * (nn - 3) / 2;      // |R_2| / |V|
    // Row x0 of A restricted to its link: 2(n-2) entries equal to alpha, in
    // theta of a matching whose theta is n - 2.
    const Rational alpha_max = Rational(mantel_link_theta(n)) / (2 * (nn - 2));

    LpProblem<Rational> lp;
    lp.objective = {r1, r2};
    lp.le_rows = {{Rational(2), Rational(-1)},
                  {-(nn - 4), nn - 3},
                  {-(2 * nn - 4), -r2}};
    lp.le_rhs = {Rational(1), Rational(1), Rational(1)};
    lp.bounds = {LpBound<Rational>{Rational(0), alpha_max}, LpBound<Rational>{std::nullopt, std::nullopt}};
    LpResult<Rational> res = solve_lp(lp);
    if (res.status != LpStatus::optimal) throw SolverError("mantel LP did not reach an optimum");
    MantelResult out;
    out.alpha = res.x[0];
    out.beta = res.x[1];
    out.value = 1 + res.objective;
    return out;
}

}  // namespace hypertheta
