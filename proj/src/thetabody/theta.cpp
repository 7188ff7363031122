#include "hypertheta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hypertheta/error.hpp"
#include "hypertheta/linalg.hpp"

namespace hypertheta {

namespace {

Eigen::MatrixXd bordered(double t, const Eigen::MatrixXd& g) {
    const Eigen::Index n = g.rows();
    Eigen::MatrixXd m(n + 1, n + 1);
    m(0, 0) = t;
    m.block(1, 1, n, n) = g;
    m.block(0, 1, 1, n) = g.diagonal().transpose();
    m.block(1, 0, n, 1) = g.diagonal();
    return m;
}

void fail(CertificateCheck& c, std::string msg) {
    if (c.ok) c.failure = std::move(msg);
    c.ok = false;
}

void verify_node(const Hypergraph& h, const ThetaCertificate& node, double tol, CertificateCheck& out) {
    const int n = h.order();
    if (node.matrix.rows() != n || node.matrix.cols() != n) {
        fail(out, "matrix has wrong dimension");
        return;
    }
    if (node.uniformity != h.uniformity()) fail(out, "uniformity mismatch");
    double lmin = n == 0 ? node.scale : min_eigenvalue(SymMatrix(bordered(node.scale, node.matrix), 1e-9));
    out.min_eigenvalue = std::min(out.min_eigenvalue, lmin);
    if (lmin < -tol) fail(out, "bordered block is not PSD");

    auto residual = [&](double v, const char* what) {
        out.max_residual = std::max(out.max_residual, std::abs(v));
        if (std::abs(v) > tol) fail(out, what);
    };
    const Eigen::MatrixXd& g = node.matrix;
    if (h.uniformity() == 1) {
        for (const Edge& e : h.edges()) residual(g(e[0], e[0]), "1-uniform leaf is nonzero on an edge vertex");
        return;
    }
    if (h.uniformity() == 2) {
        for (const Edge& e : h.edges()) residual(g(e[0], e[1]), "graph node is nonzero on an edge");
        return;
    }
    for (Vertex x = 0; x < n; ++x) {
        Link l = link(h, x);
        if (l.hypergraph.order() == 0) continue;
        auto it = std::find_if(node.children.begin(), node.children.end(),
                               [&](const auto& c) { return c.first == x; });
        if (it == node.children.end()) {
            fail(out, "missing child certificate for vertex " + std::to_string(x));
            continue;
        }
        const ThetaCertificate& child = it->second;
        if (child.vertices != l.vertices) {
            fail(out, "child vertex set does not match the link");
            continue;
        }
        residual(child.scale - g(x, x), "child scale differs from the parent diagonal");
        if (child.matrix.rows() == l.hypergraph.order())
            for (std::size_t j = 0; j < l.vertices.size(); ++j)
                residual(child.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) - g(x, l.vertices[j]),
                         "child diagonal differs from the parent row");
        verify_node(l.hypergraph, child, tol, out);
    }
}

bool all_finite(std::span<const double> w) {
    return std::all_of(w.begin(), w.end(), [](double v) { return std::isfinite(v); });
}

void check_weights(const Hypergraph& h, std::span<const double> w) {
    if (static_cast<int>(w.size()) != h.order()) throw InputError("weight vector length does not match vertex count");
    if (!all_finite(w)) throw InputError("weights must be finite");
}

[[noreturn]] void solver_failure(const char* what, const SdpSolution& s) {
    throw SolverError(std::string(what) + ": SDP " + to_string(s.status) + " after " + std::to_string(s.iterations) +
                      " iterations (gap " + std::to_string(s.relative_gap) + ", primal infeasibility " +
                      std::to_string(s.primal_infeasibility) + ", dual infeasibility " +
                      std::to_string(s.dual_infeasibility) + ")" + (s.message.empty() ? "" : ": " + s.message));
}

struct ThetaProgram {
    SdpProblem problem;
    NodeLayout root;
};

ThetaProgram theta_program(const Hypergraph& h, std::span<const double> w) {
    ThetaProgram prog;
    prog.root = add_theta_node(prog.problem, h, std::nullopt, {});
    int c = prog.problem.add_constraint(1.0);
    prog.problem.add_term(c, prog.root.block, 0, 0, 1.0);
    for (int v = 0; v < h.order(); ++v)
        if (w[static_cast<std::size_t>(v)] != 0.0) prog.problem.add_objective(prog.root.block, v + 1, v + 1, w[static_cast<std::size_t>(v)]);
    return prog;
}

/// f in IND(H) for a 1-uniform H, scaled: G = f f^T + diag(f - f^2).
ThetaCertificate box_certificate(const Hypergraph& h, const WeightVector& f, double t) {
    ThetaCertificate c;
    c.uniformity = h.uniformity();
    c.vertices.resize(static_cast<std::size_t>(h.order()));
    std::iota(c.vertices.begin(), c.vertices.end(), 0);
    c.scale = t;
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(f.data(), static_cast<Eigen::Index>(f.size()));
    c.matrix = v * v.transpose() / (t > 0 ? t : 1.0);
    for (Eigen::Index i = 0; i < v.size(); ++i) c.matrix(i, i) = v(i);
    return c;
}

}  // namespace

CertificateCheck verify_certificate(const Hypergraph& h, const ThetaCertificate& cert, double tol) {
    CertificateCheck out;
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    verify_node(h, cert, tol, out);
    if (!std::isfinite(out.min_eigenvalue)) out.min_eigenvalue = 0.0;
    return out;
}

ThetaCertificate zero_certificate(const Hypergraph& h) {
    ThetaCertificate c;
    c.uniformity = h.uniformity();
    c.vertices.resize(static_cast<std::size_t>(h.order()));
    std::iota(c.vertices.begin(), c.vertices.end(), 0);
    c.matrix = Eigen::MatrixXd::Zero(h.order(), h.order());
    if (h.uniformity() >= 3) {
        for (Vertex x = 0; x < h.order(); ++x) {
            Link l = link(h, x);
            if (l.hypergraph.order() == 0) continue;
            ThetaCertificate child = zero_certificate(l.hypergraph);
            child.vertices = l.vertices;
            c.children.emplace_back(x, std::move(child));
        }
    }
    return c;
}

SolverDiagnostics diagnostics_of(const SdpProblem& p, const SdpSolution& s) {
    SolverDiagnostics d;
    d.status = to_string(s.status);
    d.iterations = s.iterations;
    d.blocks = p.block_count();
    d.constraints = p.constraint_count();
    d.dropped_constraints = s.dropped_constraints;
    d.primal_objective = s.primal_objective;
    d.dual_objective = s.dual_objective;
    d.relative_gap = s.relative_gap;
    d.primal_infeasibility = s.primal_infeasibility;
    d.dual_infeasibility = s.dual_infeasibility;
    d.message = s.message;
    return d;
}

NodeLayout add_theta_node(SdpProblem& p, const Hypergraph& h, std::optional<ScalarRef> corner,
                          std::span<const ScalarRef> diag, std::span<const char> active) {
    const int n = h.order();
    if (!active.empty() && static_cast<int>(active.size()) != n) throw InputError("active mask has wrong length");
    if (!diag.empty() && static_cast<int>(diag.size()) != n) throw InputError("diagonal references have wrong length");
    NodeLayout node;
    node.hypergraph = h;
    node.vertices.resize(static_cast<std::size_t>(n));
    std::iota(node.vertices.begin(), node.vertices.end(), 0);
    node.position.assign(static_cast<std::size_t>(n), -1);
    int dim = 0;
    for (int v = 0; v < n; ++v)
        if (active.empty() || active[static_cast<std::size_t>(v)]) node.position[static_cast<std::size_t>(v)] = dim++;
    node.block = p.add_block(dim + 1);
    const int b = node.block;
    auto pos = [&](Vertex v) { return node.position[static_cast<std::size_t>(v)]; };

    if (corner) {
        int c = p.add_constraint(0.0);
        p.add_term(c, b, 0, 0, 1.0);
        p.add_term(c, corner->block, corner->row, corner->col, -1.0);
    }
    for (int v = 0; v < n; ++v) {
        int i = pos(v);
        if (i < 0) continue;
        int c = p.add_constraint(0.0);
        p.add_term(c, b, 0, i + 1, 1.0);
        p.add_term(c, b, i + 1, i + 1, -1.0);
        if (!diag.empty()) {
            const ScalarRef& ref = diag[static_cast<std::size_t>(v)];
            c = p.add_constraint(0.0);
            p.add_term(c, b, i + 1, i + 1, 1.0);
            p.add_term(c, ref.block, ref.row, ref.col, -1.0);
        }
    }

    if (h.uniformity() == 1) {
        for (const Edge& e : h.edges()) {
            if (pos(e[0]) < 0) continue;
            int c = p.add_constraint(0.0);
            p.add_term(c, b, pos(e[0]) + 1, pos(e[0]) + 1, 1.0);
        }
        return node;
    }
    if (h.uniformity() == 2) {
        for (const Edge& e : h.edges()) {
            if (pos(e[0]) < 0 || pos(e[1]) < 0) continue;
            int c = p.add_constraint(0.0);
            p.add_term(c, b, pos(e[0]) + 1, pos(e[1]) + 1, 1.0);
        }
        return node;
    }
    for (Vertex x = 0; x < n; ++x) {
        Link l = link(h, x);
        if (l.hypergraph.order() == 0) continue;
        NodeLayout child;
        if (pos(x) < 0) {
            child.hypergraph = l.hypergraph;
            child.position.assign(l.vertices.size(), -1);
        } else {
            std::vector<char> child_active(l.vertices.size());
            std::vector<ScalarRef> refs(l.vertices.size(), ScalarRef{b, 0, 0});
            for (std::size_t j = 0; j < l.vertices.size(); ++j) {
                int py = pos(l.vertices[j]);
                child_active[j] = py >= 0 ? 1 : 0;
                if (py >= 0) refs[j] = ScalarRef{b, pos(x) + 1, py + 1};
            }
            child = add_theta_node(p, l.hypergraph, ScalarRef{b, pos(x) + 1, pos(x) + 1}, refs, child_active);
        }
        child.vertices = l.vertices;
        node.children.emplace_back(x, std::move(child));
    }
    return node;
}

ThetaCertificate extract_certificate(const NodeLayout& layout, const std::vector<Eigen::MatrixXd>& blocks) {
    if (layout.block < 0) {
        ThetaCertificate z = zero_certificate(layout.hypergraph);
        z.vertices = layout.vertices;
        return z;
    }
    const Eigen::MatrixXd& x = blocks[static_cast<std::size_t>(layout.block)];
    const int n = layout.hypergraph.order();
    ThetaCertificate c;
    c.uniformity = layout.hypergraph.uniformity();
    c.vertices = layout.vertices;
    c.scale = x(0, 0);
    c.matrix = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        int pi = layout.position[static_cast<std::size_t>(i)];
        if (pi < 0) continue;
        for (int j = 0; j < n; ++j) {
            int pj = layout.position[static_cast<std::size_t>(j)];
            if (pj >= 0) c.matrix(i, j) = x(pi + 1, pj + 1);
        }
    }
    for (const auto& [v, child] : layout.children) c.children.emplace_back(v, extract_certificate(child, blocks));
    return c;
}

SdpProblem assemble_theta_sdp(const Hypergraph& h, std::span<const double> w) {
    check_weights(h, w);
    return theta_program(h, w).problem;
}

ThetaResult theta(const Hypergraph& h, std::span<const double> w, const SdpOptions& options) {
    check_weights(h, w);
    ThetaResult out;
    const int n = h.order();
    if (h.uniformity() == 1) {
        out.f.assign(static_cast<std::size_t>(n), 0.0);
        std::vector<char> is_edge(static_cast<std::size_t>(n), 0);
        for (const Edge& e : h.edges()) is_edge[static_cast<std::size_t>(e[0])] = 1;
        for (int v = 0; v < n; ++v) {
            if (is_edge[static_cast<std::size_t>(v)] || w[static_cast<std::size_t>(v)] <= 0.0) continue;
            out.f[static_cast<std::size_t>(v)] = 1.0;
            out.value += w[static_cast<std::size_t>(v)];
        }
        out.certificate = box_certificate(h, out.f, 1.0);
        out.diagnostics.status = "combinatorial";
        return out;
    }
    ThetaProgram prog = theta_program(h, w);
    SdpSolution sol = solve_sdp(prog.problem, options);
    out.diagnostics = diagnostics_of(prog.problem, sol);
    if (sol.status != SdpStatus::optimal) solver_failure("theta", sol);
    out.certificate = extract_certificate(prog.root, sol.primal);
    out.f.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.f[static_cast<std::size_t>(v)] = out.certificate.matrix(v, v);
    out.value = sol.primal_objective;
    return out;
}

ThetaResult theta(const Hypergraph& h, const SdpOptions& options) {
    WeightVector ones(static_cast<std::size_t>(h.order()), 1.0);
    return theta(h, ones, options);
}

GaugeResult theta_gauge(const Hypergraph& h, std::span<const double> f, const SdpOptions& options) {
    check_weights(h, f);
    const int n = h.order();
    constexpr double kSupport = 1e-12;
    for (double v : f)
        if (v < -kSupport) throw InputError("gauge needs a nonnegative vector");
    std::vector<char> active(static_cast<std::size_t>(n), 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
        active[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(v)] > kSupport ? 1 : 0;
        any = any || active[static_cast<std::size_t>(v)];
    }
    GaugeResult out;
    WeightVector fc(f.begin(), f.end());
    for (int v = 0; v < n; ++v)
        if (!active[static_cast<std::size_t>(v)]) fc[static_cast<std::size_t>(v)] = 0.0;
    if (!any) {
        out.certificate = zero_certificate(h);
        out.diagnostics.status = "trivial";
        return out;
    }
    if (h.uniformity() == 1) {
        out.diagnostics.status = "combinatorial";
        for (const Edge& e : h.edges())
            if (active[static_cast<std::size_t>(e[0])]) {
                out.value = std::numeric_limits<double>::infinity();
                out.certificate = zero_certificate(h);
                return out;
            }
        out.value = *std::max_element(fc.begin(), fc.end());
        out.certificate = box_certificate(h, fc, out.value);
        return out;
    }

    SdpProblem p;
    NodeLayout root = add_theta_node(p, h, std::nullopt, {}, active);
    for (int v = 0; v < n; ++v) {
        int i = root.position[static_cast<std::size_t>(v)];
        if (i < 0) continue;
        int c = p.add_constraint(fc[static_cast<std::size_t>(v)]);
        p.add_term(c, root.block, i + 1, i + 1, 1.0);
    }
    p.add_objective(root.block, 0, 0, -1.0);
    SdpSolution sol = solve_sdp(p, options);
    out.diagnostics = diagnostics_of(p, sol);
    if (sol.status != SdpStatus::optimal) solver_failure("theta gauge", sol);
    out.certificate = extract_certificate(root, sol.primal);
    out.value = out.certificate.scale;
    return out;
}

MembershipResult theta_membership(const Hypergraph& h, std::span<const double> f, double tol,
                                  const SdpOptions& options) {
    check_weights(h, f);
    MembershipResult out;
    for (double v : f) {
        if (v < -tol || v > 1.0 + tol) {
            out.gauge = std::numeric_limits<double>::infinity();
            out.diagnostics.status = "out-of-box";
            return out;
        }
    }
    WeightVector fc(f.begin(), f.end());
    for (double& v : fc) v = std::clamp(v, 0.0, 1.0);
    GaugeResult g = theta_gauge(h, fc, options);
    out.gauge = g.value;
    out.diagnostics = g.diagnostics;
    out.member = g.value <= 1.0 + tol;
    if (out.member) {
        // Raising the corner keeps every block PSD.
        g.certificate.scale = 1.0;
        out.certificate = std::move(g.certificate);
    }
    return out;
}

ThetaDualResult theta_dual(const Hypergraph& h, std::span<const double> w, const SdpOptions& options) {
    check_weights(h, w);
    if (h.uniformity() < 2) throw UniformityTooSmall("theta_dual needs uniformity at least 2");
    for (double v : w)
        if (v < 0.0) throw InputError("theta_dual needs nonnegative weights");
    Hypergraph hc = complement(h);
    GaugeResult g = theta_gauge(hc, w, options);
    ThetaDualResult out;
    out.value = g.value;
    out.z = g.certificate.matrix;
    out.certificate = std::move(g.certificate);
    out.diagnostics = g.diagnostics;
    return out;
}

double antiblocker_probe(std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size()) throw InputError("antiblocker probe needs vectors of equal length");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
    return s;
}

}  // namespace hypertheta
