#include "hypertheta/sdp.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseQR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "hypertheta/error.hpp"

namespace hypertheta {

SdpProblem::SdpProblem(std::vector<int> block_dims) {
    for (int d : block_dims) add_block(d);
}

int SdpProblem::add_block(int dim) {
    if (dim < 1) throw InputError("SDP block dimension must be positive");
    dims_.push_back(dim);
    return static_cast<int>(dims_.size()) - 1;
}

void SdpProblem::check_entry(int block, int i, int j) const {
    if (block < 0 || block >= block_count()) throw InputError("SDP block index out of range");
    int d = dims_[static_cast<std::size_t>(block)];
    if (i < 0 || j < 0 || i >= d || j >= d) throw InputError("SDP entry index out of range");
}

void SdpProblem::add_objective(int block, int i, int j, double coef) {
    check_entry(block, i, j);
    objective_.push_back({block, std::min(i, j), std::max(i, j), coef});
}

int SdpProblem::add_constraint(double rhs) {
    rhs_.push_back(rhs);
    constraints_.emplace_back();
    return static_cast<int>(rhs_.size()) - 1;
}

void SdpProblem::add_term(int constraint, int block, int i, int j, double coef) {
    if (constraint < 0 || constraint >= constraint_count()) throw InputError("SDP constraint index out of range");
    check_entry(block, i, j);
    constraints_[static_cast<std::size_t>(constraint)].push_back({block, std::min(i, j), std::max(i, j), coef});
}

double SdpProblem::objective_value(const std::vector<Eigen::MatrixXd>& x) const {
    double v = 0.0;
    for (const SdpEntry& e : objective_) v += e.value * x[static_cast<std::size_t>(e.block)](e.row, e.col);
    return v;
}

double SdpProblem::residual(int c, const std::vector<Eigen::MatrixXd>& x) const {
    double v = -rhs(c);
    for (const SdpEntry& e : constraint(c)) v += e.value * x[static_cast<std::size_t>(e.block)](e.row, e.col);
    return v;
}

const char* to_string(SdpStatus s) {
    switch (s) {
        case SdpStatus::optimal: return "optimal";
        case SdpStatus::infeasible: return "infeasible";
        case SdpStatus::numerical_failure: return "numerical-failure";
    }
    return "unknown";
}

namespace {

using Blocks = std::vector<Eigen::MatrixXd>;

/// Symmetric coefficient-matrix entry: A(r, c) = A(c, r) = a.
struct Term {
    int block;
    int r;
    int c;
    double a;
};

std::vector<Term> to_terms(const std::vector<SdpEntry>& entries) {
    std::map<std::tuple<int, int, int>, double> merged;
    for (const SdpEntry& e : entries) merged[{e.block, e.row, e.col}] += e.value;
    std::vector<Term> out;
    for (const auto& [key, v] : merged) {
        if (v == 0.0) continue;
        auto [b, r, c] = key;
        out.push_back({b, r, c, r == c ? v : 0.5 * v});
    }
    return out;
}

double inner(const Blocks& a, const Blocks& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k].cwiseProduct(b[k]).sum();
    return s;
}

double frobenius(const Blocks& a) { return std::sqrt(inner(a, a)); }

class Model {
public:
    Model(const SdpProblem& p, const std::vector<int>& kept) : dims_(p.block_dims()) {
        cons_.reserve(kept.size());
        b_.resize(static_cast<Eigen::Index>(kept.size()));
        for (std::size_t i = 0; i < kept.size(); ++i) {
            cons_.push_back(to_terms(p.constraint(kept[i])));
            b_(static_cast<Eigen::Index>(i)) = p.rhs(kept[i]);
        }
        c_ = zeros();
        for (const Term& t : to_terms(p.objective())) add_sym(c_[static_cast<std::size_t>(t.block)], t.r, t.c, t.a);
        by_block_.resize(dims_.size());
        for (std::size_t i = 0; i < cons_.size(); ++i) {
            for (const Term& t : cons_[i]) {
                double s = (t.r == t.c ? 0.5 : 1.0) * std::sqrt(2.0);
                by_block_[static_cast<std::size_t>(t.block)].push_back({static_cast<int>(i), t.r, t.c, t.a * s});
            }
        }
    }

    int m() const { return static_cast<int>(cons_.size()); }
    const Eigen::VectorXd& b() const { return b_; }
    const Blocks& c() const { return c_; }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<Term>& constraint(int i) const { return cons_[static_cast<std::size_t>(i)]; }

    Blocks zeros() const {
        Blocks z;
        for (int d : dims_) z.push_back(Eigen::MatrixXd::Zero(d, d));
        return z;
    }

    Eigen::VectorXd apply(const Blocks& x) const {
        Eigen::VectorXd out(m());
        for (int i = 0; i < m(); ++i) {
            double s = 0.0;
            for (const Term& t : cons_[static_cast<std::size_t>(i)])
                s += t.a * x[static_cast<std::size_t>(t.block)](t.r, t.c) * (t.r == t.c ? 1.0 : 2.0);
            out(i) = s;
        }
        return out;
    }

    Blocks adjoint(const Eigen::VectorXd& y) const {
        Blocks out = zeros();
        for (int i = 0; i < m(); ++i)
            for (const Term& t : cons_[static_cast<std::size_t>(i)])
                add_sym(out[static_cast<std::size_t>(t.block)], t.r, t.c, y(i) * t.a);
        return out;
    }

    /// M(i, j) = <A_i, W A_j W>, summed over blocks.
    Eigen::MatrixXd schur(const Blocks& w) const {
        Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(m(), m());
        for (std::size_t k = 0; k < dims_.size(); ++k) {
            const auto& terms = by_block_[k];
            const Eigen::MatrixXd& wk = w[k];
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const Term& p = terms[t];
                for (std::size_t u = 0; u < terms.size(); ++u) {
                    const Term& q = terms[u];
                    if (q.block < p.block) continue;  // `block` holds the constraint index here
                    double v = p.a * q.a * (wk(p.r, q.r) * wk(p.c, q.c) + wk(p.r, q.c) * wk(p.c, q.r));
                    mat(p.block, q.block) += v;
                }
            }
        }
        for (int i = 0; i < m(); ++i)
            for (int j = i + 1; j < m(); ++j) mat(j, i) = mat(i, j);
        return mat;
    }

private:
    static void add_sym(Eigen::MatrixXd& m, int r, int c, double v) {
        m(r, c) += v;
        if (r != c) m(c, r) += v;
    }

    std::vector<int> dims_;
    std::vector<std::vector<Term>> cons_;
    Eigen::VectorXd b_;
    Blocks c_;
    std::vector<std::vector<Term>> by_block_;
};

/// Indices of a maximal linearly independent subset of the constraints.
std::vector<int> independent_constraints(const SdpProblem& p, double tol) {
    const int m = p.constraint_count();
    std::vector<int> offset(p.block_dims().size() + 1, 0);
    for (std::size_t k = 0; k < p.block_dims().size(); ++k) {
        int d = p.block_dims()[k];
        offset[k + 1] = offset[k] + d * (d + 1) / 2;
    }
    auto var_index = [&](int block, int r, int c) {
        int d = p.block_dims()[static_cast<std::size_t>(block)];
        return offset[static_cast<std::size_t>(block)] + r * d - r * (r - 1) / 2 + (c - r);
    };
    std::vector<Eigen::Triplet<double>> trips;
    for (int i = 0; i < m; ++i) {
        std::map<int, double> col;
        for (const SdpEntry& e : p.constraint(i)) col[var_index(e.block, e.row, e.col)] += e.value;
        double norm = 0.0;
        for (const auto& [_, v] : col) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (const auto& [row, v] : col) trips.emplace_back(row, i, v / norm);
    }
    Eigen::SparseMatrix<double> a(offset.back(), m);
    a.setFromTriplets(trips.begin(), trips.end());
    a.makeCompressed();
    if (m == 0) return {};
    Eigen::SparseQR<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> qr;
    qr.setPivotThreshold(tol);
    qr.compute(a);
    if (qr.info() != Eigen::Success) throw SolverError("SDP presolve: sparse QR failed");
    const auto& perm = qr.colsPermutation().indices();
    std::vector<int> kept(perm.data(), perm.data() + qr.rank());
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct Scaling {
    Eigen::MatrixXd g;
    Eigen::MatrixXd g_inv;
    Eigen::MatrixXd w;
    Eigen::VectorXd d;
};

bool nt_scaling(const Eigen::MatrixXd& x, const Eigen::MatrixXd& z, Scaling& out) {
    Eigen::LLT<Eigen::MatrixXd> llt(z);
    if (llt.info() != Eigen::Success) return false;
    Eigen::MatrixXd l = llt.matrixL();
    Eigen::MatrixXd ltxl = l.transpose() * x * l;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (ltxl + ltxl.transpose()));
    if (es.info() != Eigen::Success) return false;
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(std::numeric_limits<double>::min());
    Eigen::VectorXd q = lam.array().sqrt().sqrt();
    Eigen::MatrixXd uq = es.eigenvectors() * q.asDiagonal();
    out.g = l.transpose().triangularView<Eigen::Upper>().solve(uq);
    out.g_inv = q.cwiseInverse().asDiagonal() * es.eigenvectors().transpose() * l.transpose();
    out.w = out.g * out.g.transpose();
    out.d = lam.array().sqrt();
    return true;
}

/// Largest step t with x + t*dx PSD (capped at a large number).
double max_step(const Eigen::MatrixXd& x, const Eigen::MatrixXd& dx) {
    Eigen::LLT<Eigen::MatrixXd> llt(x);
    if (llt.info() != Eigen::Success) return 0.0;
    Eigen::MatrixXd t = llt.matrixL().solve(dx);
    t = llt.matrixL().solve(t.transpose()).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (t + t.transpose()), Eigen::EigenvaluesOnly);
    double lmin = es.eigenvalues()(0);
    return lmin >= 0.0 ? 1e30 : -1.0 / lmin;
}

double max_step(const Blocks& x, const Blocks& dx) {
    double s = 1e30;
    for (std::size_t k = 0; k < x.size(); ++k) s = std::min(s, max_step(x[k], dx[k]));
    return s;
}

struct Direction {
    Blocks dx;
    Eigen::VectorXd dy;
    Blocks dz;
};

}  // namespace

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& opt) {
    SdpSolution sol;
    std::vector<int> kept = independent_constraints(problem, opt.presolve_tol);
    sol.dropped_constraints = problem.constraint_count() - static_cast<int>(kept.size());
    Model model(problem, kept);
    const auto& dims = model.dims();
    const int m = model.m();
    double n_total = 0;
    for (int d : dims) n_total += d;

    // Starting point in the spirit of SDPT3: scaled identities.
    Blocks x, z;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        double d = dims[k];
        double cnorm = model.c()[k].norm();
        double anorm_max = 0.0, ratio_max = 0.0;
        for (int i = 0; i < m; ++i) {
            double an = 0.0;
            for (const Term& t : model.constraint(i))
                if (t.block == static_cast<int>(k)) an += t.a * t.a * (t.r == t.c ? 1.0 : 2.0);
            an = std::sqrt(an);
            anorm_max = std::max(anorm_max, an);
            if (an > 0) ratio_max = std::max(ratio_max, (1.0 + std::abs(model.b()(i))) / (1.0 + an));
        }
        double xi = std::max({10.0, std::sqrt(d), d * ratio_max});
        double eta = std::max({10.0, std::sqrt(d), anorm_max, cnorm});
        x.push_back(xi * Eigen::MatrixXd::Identity(dims[k], dims[k]));
        z.push_back(eta * Eigen::MatrixXd::Identity(dims[k], dims[k]));
    }
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);

    const double bnorm = model.b().norm();
    double cnorm = frobenius(model.c());
    int stalls = 0;
    sol.status = SdpStatus::numerical_failure;
    sol.message = "iteration limit reached";

    std::vector<Scaling> sc(dims.size());
    for (int iter = 0; iter <= opt.max_iterations; ++iter) {
        sol.iterations = iter;
        Eigen::VectorXd rp = model.b() - model.apply(x);
        Blocks rd = model.adjoint(y);
        for (std::size_t k = 0; k < dims.size(); ++k) rd[k] -= model.c()[k] + z[k];

        double pobj = inner(model.c(), x);
        double dobj = model.b().dot(y);
        sol.primal_objective = pobj;
        sol.dual_objective = dobj;
        sol.relative_gap = std::abs(dobj - pobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
        sol.primal_infeasibility = rp.norm() / (1.0 + bnorm);
        sol.dual_infeasibility = frobenius(rd) / (1.0 + cnorm);
        if (!std::isfinite(pobj) || !std::isfinite(dobj)) {
            sol.message = "non-finite iterate";
            break;
        }
        if (sol.relative_gap <= opt.gap_tol && sol.primal_infeasibility <= opt.feas_tol &&
            sol.dual_infeasibility <= opt.feas_tol) {
            sol.status = SdpStatus::optimal;
            sol.message.clear();
            break;
        }
        // Farkas ray for primal infeasibility: A^T y nearly PSD with b.y << 0.
        double ynorm = y.norm();
        if (ynorm > 1e8 && dobj / ynorm < -1e-6 && sol.dual_infeasibility * (1.0 + cnorm) < 1e-6 * ynorm) {
            sol.status = SdpStatus::infeasible;
            sol.message = "primal infeasibility certificate detected";
            break;
        }
        if (iter == opt.max_iterations) break;

        bool ok = true;
        Blocks w;
        for (std::size_t k = 0; k < dims.size() && ok; ++k) {
            ok = nt_scaling(x[k], z[k], sc[k]);
            w.push_back(sc[k].w);
        }
        if (!ok) {
            sol.message = "lost positive definiteness";
            break;
        }
        Eigen::MatrixXd schur = model.schur(w);
        Eigen::LLT<Eigen::MatrixXd> chol(schur);
        Eigen::LDLT<Eigen::MatrixXd> ldlt;
        bool use_ldlt = chol.info() != Eigen::Success;
        if (use_ldlt) {
            double reg = 1e-14 * std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
            schur.diagonal().array() += reg;
            ldlt.compute(schur);
            if (ldlt.info() != Eigen::Success) {
                sol.message = "Schur complement factorization failed";
                break;
            }
        }

        Blocks wrdw;
        for (std::size_t k = 0; k < dims.size(); ++k) wrdw.push_back(w[k] * rd[k] * w[k]);
        Eigen::VectorXd a_wrdw = model.apply(wrdw);

        auto schur_solve = [&](const Eigen::VectorXd& rhs) {
            return use_ldlt ? Eigen::VectorXd(ldlt.solve(rhs)) : Eigen::VectorXd(chol.solve(rhs));
        };
        auto solve_direction = [&](const Blocks& rc) {
            Direction dir;
            dir.dy = schur_solve(model.apply(rc) - a_wrdw - rp);
            auto build = [&] {
                dir.dz = model.adjoint(dir.dy);
                dir.dx.clear();
                for (std::size_t k = 0; k < dims.size(); ++k) {
                    dir.dz[k] += rd[k];
                    Eigen::MatrixXd dxk = rc[k] - w[k] * dir.dz[k] * w[k];
                    dir.dx.push_back(0.5 * (dxk + dxk.transpose()));
                }
            };
            build();
            // Iterative refinement against the operator, not the assembled Schur matrix.
            for (int pass = 0; pass < 2; ++pass) {
                Eigen::VectorXd res = model.apply(dir.dx) - rp;
                if (res.norm() <= 1e-14 * (1.0 + rp.norm() + bnorm)) break;
                dir.dy += schur_solve(res);
                build();
            }
            return dir;
        };

        // Predictor (affine scaling).
        Blocks rc_pred;
        for (std::size_t k = 0; k < dims.size(); ++k) rc_pred.push_back(-x[k]);
        Direction pred = solve_direction(rc_pred);
        double ap = std::min(1.0, max_step(x, pred.dx));
        double ad = std::min(1.0, max_step(z, pred.dz));
        double mu = inner(x, z) / n_total;
        Blocks xa = x, za = z;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            xa[k] += ap * pred.dx[k];
            za[k] += ad * pred.dz[k];
        }
        double mu_aff = inner(xa, za) / n_total;
        double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

        // Corrector in the NT-scaled space, where X and Z both become diag(d).
        Blocks rc;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const Scaling& s = sc[k];
            Eigen::MatrixXd xt = s.g_inv * pred.dx[k] * s.g_inv.transpose();
            Eigen::MatrixXd zt = s.g.transpose() * pred.dz[k] * s.g;
            Eigen::MatrixXd prod = xt * zt;
            Eigen::MatrixXd r = -0.5 * (prod + prod.transpose());
            r.diagonal().array() += sigma * mu - s.d.array().square();
            const int d = dims[k];
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) r(i, j) = 2.0 * r(i, j) / (s.d(i) + s.d(j));
            rc.push_back(s.g * r * s.g.transpose());
        }
        Direction dir = solve_direction(rc);

        double steptol = 0.9 + 0.09 * std::min(ap, ad);
        double sp = std::min(1.0, steptol * max_step(x, dir.dx));
        double sd = std::min(1.0, steptol * max_step(z, dir.dz));
        if (sp < 1e-10 && sd < 1e-10) {
            if (++stalls >= 3) {
                sol.message = "step length stalled";
                break;
            }
        } else {
            stalls = 0;
        }
        for (std::size_t k = 0; k < dims.size(); ++k) {
            x[k] += sp * dir.dx[k];
            z[k] += sd * dir.dz[k];
            x[k] = 0.5 * (x[k] + x[k].transpose());
            z[k] = 0.5 * (z[k] + z[k].transpose());
        }
        y += sd * dir.dy;
    }

    sol.primal = x;
    sol.dual_slack = z;
    sol.dual = Eigen::VectorXd::Zero(problem.constraint_count());
    for (std::size_t i = 0; i < kept.size(); ++i) sol.dual(kept[i]) = y(static_cast<Eigen::Index>(i));

    if (sol.status == SdpStatus::optimal && sol.dropped_constraints > 0) {
        std::vector<char> is_kept(static_cast<std::size_t>(problem.constraint_count()), 0);
        for (int i : kept) is_kept[static_cast<std::size_t>(i)] = 1;
        for (int i = 0; i < problem.constraint_count(); ++i) {
            if (is_kept[static_cast<std::size_t>(i)]) continue;
            if (std::abs(problem.residual(i, x)) > 1e3 * opt.feas_tol * (1.0 + std::abs(problem.rhs(i)))) {
                sol.status = SdpStatus::infeasible;
                sol.message = "dependent constraints are inconsistent";
                break;
            }
        }
    }
    return sol;
}

}  // namespace hypertheta
