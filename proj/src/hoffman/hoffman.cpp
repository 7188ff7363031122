#include "hypertheta/hoffman.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hypertheta/error.hpp"
#include "hypertheta/linalg.hpp"
#include "hypertheta/theta.hpp"

namespace hypertheta {

WeightedHypergraph::WeightedHypergraph(int r, int n, std::vector<Edge> edges, std::vector<Rational> weights)
    : r_(r), input_n_(n) {
    if (edges.size() != weights.size()) throw InputError("one weight per edge is required");
    Hypergraph check(r, n, edges);  // validates the edges
    std::map<Edge, Rational> merged;
    Rational total = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (weights[i] < 0) throw InputError("edge weights must be nonnegative");
        if (weights[i] == 0) continue;
        Edge e = edges[i];
        std::sort(e.begin(), e.end());
        merged[e] += weights[i];
        total += weights[i];
    }
    if (total == 0) throw InputError("weighted hypergraph needs positive total weight");
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (const auto& [e, _] : merged)
        for (Vertex v : e) label[static_cast<std::size_t>(v)] = 0;
    for (int v = 0; v < n; ++v) {
        if (label[static_cast<std::size_t>(v)] < 0) continue;
        label[static_cast<std::size_t>(v)] = static_cast<int>(original_.size());
        original_.push_back(v);
    }
    for (const auto& [e, w] : merged) {
        Edge m;
        for (Vertex v : e) m.push_back(label[static_cast<std::size_t>(v)]);
        edges_.push_back(std::move(m));
        mu_.push_back(w / total);
    }
}

namespace {

bool contains(const Edge& e, const VertexSubset& sigma) {
    return std::includes(e.begin(), e.end(), sigma.begin(), sigma.end());
}

template <class F>
void for_each_subset(const Edge& e, int i, F&& f) {
    const int r = static_cast<int>(e.size());
    std::vector<int> idx(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) idx[static_cast<std::size_t>(k)] = k;
    VertexSubset s(static_cast<std::size_t>(i));
    for (;;) {
        for (int k = 0; k < i; ++k) s[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        f(s);
        int k = i - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == r - i + k) --k;
        if (k < 0) return;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < i; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// mu^(i) for 1 <= i <= r; mu^(r) is mu itself.
std::vector<std::pair<VertexSubset, Rational>> subset_measure(const WeightedHypergraph& x, int i) {
    const int r = x.uniformity();
    std::map<VertexSubset, Rational> acc;
    for (std::size_t k = 0; k < x.edges().size(); ++k)
        for_each_subset(x.edges()[k], i, [&](const VertexSubset& s) { acc[s] += x.measure()[k]; });
    Rational norm(binomial(r, i));
    std::vector<std::pair<VertexSubset, Rational>> out;
    for (auto& [s, m] : acc) out.emplace_back(s, m / norm);
    return out;
}

}  // namespace

std::vector<std::pair<VertexSubset, Rational>> induced_measure(const WeightedHypergraph& x, int i) {
    if (i < 1 || i > x.uniformity() - 1) throw InputError("induced measure needs 1 <= i <= r - 1");
    return subset_measure(x, i);
}

std::vector<Rational> vertex_measure(const WeightedHypergraph& x) {
    std::vector<Rational> mu1(static_cast<std::size_t>(x.order()), Rational(0));
    for (std::size_t k = 0; k < x.edges().size(); ++k)
        for (Vertex v : x.edges()[k]) mu1[static_cast<std::size_t>(v)] += x.measure()[k];
    for (Rational& m : mu1) m /= x.uniformity();
    return mu1;
}

WeightedHypergraph link_measure(const WeightedHypergraph& x, const VertexSubset& sigma) {
    VertexSubset s = sigma;
    std::sort(s.begin(), s.end());
    const int i = static_cast<int>(s.size());
    if (i < 1 || i > x.uniformity() - 1) throw InputError("link needs 1 <= |sigma| <= r - 1");
    for (Vertex v : s)
        if (v < 0 || v >= x.order()) throw InputError("sigma vertex out of range");
    std::vector<Edge> edges;
    std::vector<Rational> weights;
    for (std::size_t k = 0; k < x.edges().size(); ++k) {
        const Edge& e = x.edges()[k];
        if (!contains(e, s)) continue;
        Edge rest;
        std::set_difference(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(rest));
        edges.push_back(std::move(rest));
        weights.push_back(x.measure()[k]);
    }
    if (edges.empty()) throw InputError("sigma has zero induced measure");
    return WeightedHypergraph(x.uniformity() - i, x.order(), std::move(edges), std::move(weights));
}

AdjacencyOperator adjacency_operator(const WeightedHypergraph& x) {
    if (x.uniformity() < 2) throw UniformityTooSmall("adjacency operator needs uniformity at least 2");
    const int n = x.order();
    AdjacencyOperator op;
    op.mu1 = vertex_measure(x);
    op.exact.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (const auto& [pair, m] : subset_measure(x, 2)) {
        Vertex a = pair[0], b = pair[1];
        op.exact[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m / (2 * op.mu1[static_cast<std::size_t>(a)]);
        op.exact[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = m / (2 * op.mu1[static_cast<std::size_t>(b)]);
    }
    op.t.resize(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) op.t(a, b) = to_double(op.exact[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    return op;
}

double smallest_eigenvalue(const WeightedHypergraph& x) {
    if (x.uniformity() < 2) throw UniformityTooSmall("spectrum needs uniformity at least 2");
    const int n = x.order();
    std::vector<Rational> mu1 = vertex_measure(x);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [pair, m] : subset_measure(x, 2)) {
        Vertex a = pair[0], b = pair[1];
        double v = to_double(m) / (2.0 * std::sqrt(to_double(mu1[static_cast<std::size_t>(a)]) * to_double(mu1[static_cast<std::size_t>(b)])));
        s(a, b) = v;
        s(b, a) = v;
    }
    return min_eigenvalue(SymMatrix(s));
}

std::vector<double> lambda_levels(const WeightedHypergraph& x, std::size_t cap) {
    const int r = x.uniformity();
    if (r < 2) throw UniformityTooSmall("lambda levels need uniformity at least 2");
    std::vector<double> levels{smallest_eigenvalue(x)};
    for (int i = 1; i <= r - 2; ++i) {
        auto faces = induced_measure(x, i);
        if (faces.size() > cap) throw InstanceTooLarge("too many links to enumerate");
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [sigma, m] : faces) best = std::min(best, smallest_eigenvalue(link_measure(x, sigma)));
        levels.push_back(best);
    }
    return levels;
}

double hoff(const std::vector<double>& levels) {
    double prod = 1.0;
    for (double l : levels) prod *= 1.0 - l;
    return 1.0 - 1.0 / prod;
}

double hoff(const WeightedHypergraph& x) { return hoff(lambda_levels(x)); }

HoffmanReport hoffman_report(const WeightedHypergraph& x) {
    HoffmanReport rep;
    rep.levels = lambda_levels(x);
    rep.hoff = hoff(rep.levels);
    Hypergraph h = x.underlying();
    WeightVector w;
    for (const Rational& m : vertex_measure(x)) w.push_back(to_double(m));
    rep.theta = theta(h, w).value;
    if (h.order() <= kAlphaCap) rep.alpha = alpha(h, w).value;
    return rep;
}

WeightedHypergraph random_weighted_hypergraph(int r, int n, double p, std::mt19937_64& rng) {
    if (r < 1 || n < r) throw InputError("random hypergraph needs 1 <= r <= n");
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        Edge e(static_cast<std::size_t>(r));
        std::vector<int> idx(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) idx[static_cast<std::size_t>(k)] = k;
        for (;;) {
            if (coin(rng)) {
                for (int k = 0; k < r; ++k) e[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k)];
                edges.push_back(e);
            }
            int k = r - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - r + k) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (edges.empty()) continue;
        std::vector<Rational> weights(edges.size(), Rational(1));
        return WeightedHypergraph(r, n, std::move(edges), std::move(weights));
    }
}

}  // namespace hypertheta
