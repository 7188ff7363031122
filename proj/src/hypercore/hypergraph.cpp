#include "hypertheta/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "hypertheta/error.hpp"
#include "hypertheta/lp.hpp"

namespace hypertheta {

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n), edges_(std::move(edges)) {
    if (r < 1) throw InputError("uniformity must be at least 1, got " + std::to_string(r));
    if (n < 0) throw InputError("vertex count must be nonnegative, got " + std::to_string(n));
    for (Edge& e : edges_) {
        if (static_cast<int>(e.size()) != r)
            throw InputError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(r) +
                             "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw InputError("vertex " + std::to_string(e[i]) + " out of range [0, " + std::to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1]) throw InputError("edge repeats vertex " + std::to_string(e[i]));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e, [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
}

std::vector<Edge> Hypergraph::edges_containing(Vertex x) const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (std::binary_search(e.begin(), e.end(), x)) out.push_back(e);
    return out;
}

Link link(const Hypergraph& h, Vertex x) {
    if (h.uniformity() < 2) throw UniformityTooSmall("link needs uniformity at least 2");
    if (x < 0 || x >= h.order()) throw InputError("vertex " + std::to_string(x) + " out of range");
    std::vector<Edge> incident = h.edges_containing(x);
    std::vector<Vertex> verts;
    for (const Edge& e : incident)
        for (Vertex y : e)
            if (y != x) verts.push_back(y);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<Edge> edges;
    edges.reserve(incident.size());
    for (const Edge& e : incident) {
        Edge rest;
        for (Vertex y : e) {
            if (y == x) continue;
            rest.push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), y) - verts.begin()));
        }
        edges.push_back(std::move(rest));
    }
    return Link{Hypergraph(h.uniformity() - 1, static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

namespace {

constexpr double kCombinationCap = 5e6;

double choose_estimate(int n, int r) {
    double c = 1.0;
    for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
    return c;
}

template <class F>
void for_each_combination(int n, int r, F&& f) {
    if (r > n) return;
    std::vector<Vertex> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
    for (;;) {
        f(std::span<const Vertex>(c));
        int i = r - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

Hypergraph complement(const Hypergraph& h) {
    if (choose_estimate(h.order(), h.uniformity()) > kCombinationCap)
        throw InstanceTooLarge("complement would enumerate more than 5e6 r-subsets");
    std::vector<Edge> edges;
    for_each_combination(h.order(), h.uniformity(), [&](std::span<const Vertex> c) {
        if (!h.has_edge(c)) edges.emplace_back(c.begin(), c.end());
    });
    return Hypergraph(h.uniformity(), h.order(), std::move(edges));
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> subset) {
    std::vector<int> position(static_cast<std::size_t>(h.order()), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        Vertex v = subset[i];
        if (v < 0 || v >= h.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
        if (position[static_cast<std::size_t>(v)] >= 0) throw InputError("repeated vertex in subset");
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        Edge mapped;
        for (Vertex y : e) {
            if (position[static_cast<std::size_t>(y)] < 0) break;
            mapped.push_back(position[static_cast<std::size_t>(y)]);
        }
        if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
    }
    return Hypergraph(h.uniformity(), static_cast<int>(subset.size()), std::move(edges));
}

bool is_independent(const Hypergraph& h, std::span<const Vertex> subset) {
    std::vector<char> in(static_cast<std::size_t>(h.order()), 0);
    for (Vertex v : subset) {
        if (v < 0 || v >= h.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (const Edge& e : h.edges()) {
        if (std::all_of(e.begin(), e.end(), [&](Vertex y) { return in[static_cast<std::size_t>(y)] != 0; }))
            return false;
    }
    return true;
}

bool is_clique(const Hypergraph& h, std::span<const Vertex> subset) {
    VertexSubset s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    const int r = h.uniformity();
    if (static_cast<int>(s.size()) < r) return true;
    bool ok = true;
    Edge e(static_cast<std::size_t>(r));
    for_each_combination(static_cast<int>(s.size()), r, [&](std::span<const Vertex> idx) {
        if (!ok) return;
        for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (!h.has_edge(e)) ok = false;
    });
    return ok;
}

namespace {

using Mask = std::uint64_t;

void check_cap(const Hypergraph& h, int cap, const char* what) {
    if (h.order() > cap || h.order() > 62)
        throw InstanceTooLarge(std::string(what) + ": " + std::to_string(h.order()) + " vertices exceeds the cap of " +
                               std::to_string(std::min(cap, 62)));
}

/// closing[v]: for each edge whose largest vertex is v, the mask of its other vertices.
std::vector<std::vector<Mask>> closing_masks(const Hypergraph& h) {
    std::vector<std::vector<Mask>> closing(static_cast<std::size_t>(h.order()));
    for (const Edge& e : h.edges()) {
        Mask m = 0;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) m |= Mask{1} << e[i];
        closing[static_cast<std::size_t>(e.back())].push_back(m);
    }
    return closing;
}

bool can_add(const std::vector<std::vector<Mask>>& closing, Mask current, int v) {
    for (Mask m : closing[static_cast<std::size_t>(v)])
        if ((current & m) == m) return false;
    return true;
}

VertexSubset to_subset(Mask m) {
    VertexSubset s;
    for (int v = 0; m != 0; ++v, m >>= 1)
        if (m & 1) s.push_back(v);
    return s;
}

}  // namespace

AlphaResult alpha(const Hypergraph& h, std::span<const double> w, int cap) {
    check_cap(h, cap, "alpha");
    const int n = h.order();
    if (static_cast<int>(w.size()) != n) throw InputError("weight vector length does not match vertex count");
    auto closing = closing_masks(h);
    std::vector<double> suffix(static_cast<std::size_t>(n) + 1, 0.0);
    for (int v = n - 1; v >= 0; --v)
        suffix[static_cast<std::size_t>(v)] = suffix[static_cast<std::size_t>(v) + 1] + std::max(0.0, w[static_cast<std::size_t>(v)]);

    double best = 0.0;
    Mask best_mask = 0;
    auto search = [&](auto&& self, int v, Mask current, double value) -> void {
        if (value > best) {
            best = value;
            best_mask = current;
        }
        if (v == n || value + suffix[static_cast<std::size_t>(v)] <= best) return;
        double wv = w[static_cast<std::size_t>(v)];
        if (wv > 0 && can_add(closing, current, v)) self(self, v + 1, current | (Mask{1} << v), value + wv);
        self(self, v + 1, current, value);
    };
    search(search, 0, 0, 0.0);
    return AlphaResult{best, to_subset(best_mask)};
}

AlphaResult alpha(const Hypergraph& h, int cap) {
    std::vector<double> ones(static_cast<std::size_t>(h.order()), 1.0);
    return alpha(h, ones, cap);
}

std::vector<VertexSubset> enumerate_independent_sets(const Hypergraph& h, int cap) {
    check_cap(h, cap, "independent-set enumeration");
    const int n = h.order();
    auto closing = closing_masks(h);
    std::vector<VertexSubset> out;
    auto extend = [&](auto&& self, int start, Mask current) -> void {
        for (int v = start; v < n; ++v) {
            if (!can_add(closing, current, v)) continue;
            Mask next = current | (Mask{1} << v);
            out.push_back(to_subset(next));
            self(self, v + 1, next);
        }
    };
    extend(extend, 0, 0);
    return out;
}

std::vector<VertexSubset> enumerate_cliques(const Hypergraph& h, int cap) {
    check_cap(h, cap, "clique enumeration");
    std::vector<VertexSubset> cliques = enumerate_independent_sets(complement(h), cap);
    std::unordered_set<Mask> masks;
    for (const auto& c : cliques) {
        Mask m = 0;
        for (Vertex v : c) m |= Mask{1} << v;
        masks.insert(m);
    }
    std::vector<VertexSubset> maximal;
    for (const auto& c : cliques) {
        Mask m = 0;
        for (Vertex v : c) m |= Mask{1} << v;
        bool extendable = false;
        for (int v = 0; v < h.order() && !extendable; ++v)
            if (!(m >> v & 1) && masks.count(m | (Mask{1} << v))) extendable = true;
        if (!extendable) maximal.push_back(c);
    }
    return maximal;
}

bool in_clique_polytope(const Hypergraph& h, std::span<const double> f, double tol, int cap) {
    if (static_cast<int>(f.size()) != h.order()) throw InputError("vector length does not match vertex count");
    for (double v : f)
        if (v < -tol || v > 1.0 + tol) return false;
    const double bound = h.uniformity() - 1;
    for (const auto& c : enumerate_cliques(h, cap)) {
        double s = 0.0;
        for (Vertex v : c) s += f[static_cast<std::size_t>(v)];
        if (s > bound + tol) return false;
    }
    return true;
}

namespace {

template <class T>
LpResult<T> coloring_lp(const Hypergraph& h, std::span<const T> w, const std::vector<VertexSubset>& sets) {
    LpProblem<T> lp;
    lp.objective.assign(sets.size(), T(-1));
    lp.eq_rows.assign(static_cast<std::size_t>(h.order()), std::vector<T>(sets.size(), T(0)));
    for (std::size_t k = 0; k < sets.size(); ++k)
        for (Vertex v : sets[k]) lp.eq_rows[static_cast<std::size_t>(v)][k] = T(1);
    lp.eq_rhs.assign(w.begin(), w.end());
    return solve_lp(lp);
}

template <class T>
void check_coloring_input(const Hypergraph& h, std::span<const T> w) {
    if (static_cast<int>(w.size()) != h.order()) throw InputError("weight vector length does not match vertex count");
    for (const T& v : w)
        if (v < 0) throw InputError("fractional chromatic number needs nonnegative weights");
    if (h.uniformity() == 1 && !h.empty()) throw NoColoring("a 1-uniform hypergraph with an edge has no coloring");
}

}  // namespace

ChiStarResult chi_star(const Hypergraph& h, std::span<const double> w, int cap) {
    check_coloring_input(h, w);
    auto sets = enumerate_independent_sets(h, cap);
    auto res = coloring_lp<double>(h, w, sets);
    if (res.status != LpStatus::optimal) throw SolverError("fractional coloring LP is " + std::string(to_string(res.status)));
    ChiStarResult out;
    out.value = -res.objective;
    for (std::size_t k = 0; k < sets.size(); ++k)
        if (res.x[k] > 1e-12) out.coloring.emplace_back(sets[k], res.x[k]);
    return out;
}

ChiStarResult chi_star_exact(const Hypergraph& h, std::span<const Rational> w, int cap) {
    check_coloring_input(h, w);
    auto sets = enumerate_independent_sets(h, cap);
    auto res = coloring_lp<Rational>(h, w, sets);
    if (res.status != LpStatus::optimal) throw SolverError("fractional coloring LP is " + std::string(to_string(res.status)));
    ChiStarResult out;
    out.exact = Rational(-res.objective);
    out.value = to_double(*out.exact);
    for (std::size_t k = 0; k < sets.size(); ++k)
        if (sgn(res.x[k]) > 0) out.coloring.emplace_back(sets[k], to_double(res.x[k]));
    return out;
}

Hypergraph random_hypergraph(int r, int n, double p, std::mt19937_64& rng) {
    if (r < 1 || n < 0) throw InputError("random hypergraph needs r >= 1 and n >= 0");
    if (choose_estimate(n, r) > kCombinationCap) throw InstanceTooLarge("too many r-subsets to sample");
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for_each_combination(n, r, [&](std::span<const Vertex> c) {
        if (coin(rng)) edges.emplace_back(c.begin(), c.end());
    });
    return Hypergraph(r, n, std::move(edges));
}

}  // namespace hypertheta
