#pragma once

// Dense two-phase tableau simplex with Bland's rule. Works over double and
// over Rational; the rational instantiation is exact.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "hypertheta/error.hpp"
#include "hypertheta/rational.hpp"

namespace hypertheta {

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus s);

template <class T>
struct LpBound {
    std::optional<T> lower = T(0);
    std::optional<T> upper;
};

/// maximize objective.x  subject to  eq_rows x = eq_rhs,  le_rows x <= le_rhs,
/// and per-variable bounds (default x >= 0 when `bounds` is empty).
template <class T>
struct LpProblem {
    std::vector<T> objective;
    std::vector<std::vector<T>> eq_rows;
    std::vector<T> eq_rhs;
    std::vector<std::vector<T>> le_rows;
    std::vector<T> le_rhs;
    std::vector<LpBound<T>> bounds;
};

template <class T>
struct LpResult {
    LpStatus status = LpStatus::infeasible;
    T objective = T(0);
    std::vector<T> x;
    std::vector<T> eq_duals;  ///< free sign
    std::vector<T> le_duals;  ///< nonnegative at optimality
};

namespace detail {

template <class T>
struct PivotTolerance {
    static bool negative(const T& v) { return v < 0; }
    static bool positive(const T& v) { return v > 0; }
};

template <>
struct PivotTolerance<double> {
    static constexpr double eps = 1e-11;
    static bool negative(double v) { return v < -eps; }
    static bool positive(double v) { return v > eps; }
};

template <class T>
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<T>(cols + 1, T(0))), basis_(rows, 0), cols_(cols) {}

    std::vector<std::vector<T>> a_;  // last column is the right-hand side
    std::vector<std::size_t> basis_;
    std::vector<T> obj_;  // reduced-cost row: c_B B^-1 A_j - c_j, last entry = objective value
    std::size_t cols_;

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t r, std::size_t c) {
        const std::size_t width = cols_ + 1;
        T p = a_[r][c];
        for (std::size_t j = 0; j < width; ++j) a_[r][j] /= p;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || a_[i][c] == 0) continue;
            T f = a_[i][c];
            for (std::size_t j = 0; j < width; ++j) a_[i][j] -= f * a_[r][j];
        }
        if (obj_[c] != 0) {
            T f = obj_[c];
            for (std::size_t j = 0; j < width; ++j) obj_[j] -= f * a_[r][j];
        }
        basis_[r] = c;
    }

    void set_costs(const std::vector<T>& cost) {
        const std::size_t width = cols() + 1;
        obj_.assign(width, T(0));
        for (std::size_t j = 0; j < cols(); ++j) obj_[j] = -cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
            const T& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < width; ++j) obj_[j] += cb * a_[i][j];
        }
    }

    /// Bland's rule: lowest-index improving column, lowest-index leaving basic variable on ties.
    /// Returns false when unbounded.
    bool optimize(std::size_t enterable_cols) {
        using Tol = PivotTolerance<T>;
        for (;;) {
            std::size_t enter = enterable_cols;
            for (std::size_t j = 0; j < enterable_cols; ++j) {
                if (Tol::negative(obj_[j])) {
                    enter = j;
                    break;
                }
            }
            if (enter == enterable_cols) return true;
            std::size_t leave = rows();
            T best_ratio(0);
            for (std::size_t i = 0; i < rows(); ++i) {
                if (!Tol::positive(a_[i][enter])) continue;
                T ratio = a_[i].back() / a_[i][enter];
                if (leave == rows() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows()) return false;
            pivot(leave, enter);
        }
    }
};

template <class T>
LpResult<T> status_only(LpStatus s) {
    LpResult<T> r;
    r.status = s;
    return r;
}

}  // namespace detail

template <class T>
LpResult<T> solve_lp(const LpProblem<T>& p) {
    using Tol = detail::PivotTolerance<T>;
    const std::size_t n = p.objective.size();
    if (p.eq_rows.size() != p.eq_rhs.size() || p.le_rows.size() != p.le_rhs.size())
        throw InputError("solve_lp: row count does not match right-hand side length");
    for (const auto& row : p.eq_rows)
        if (row.size() != n) throw InputError("solve_lp: equality row has wrong length");
    for (const auto& row : p.le_rows)
        if (row.size() != n) throw InputError("solve_lp: inequality row has wrong length");
    if (!p.bounds.empty() && p.bounds.size() != n) throw InputError("solve_lp: bounds has wrong length");

    // Each original variable becomes offset + sum(sign * standard variable).
    struct Piece {
        std::size_t var;
        int sign;
    };
    std::vector<T> offset(n, T(0));
    std::vector<std::vector<Piece>> pieces(n);
    std::vector<std::pair<std::size_t, T>> upper_rows;  // standard var <= value
    std::size_t nstd = 0;
    for (std::size_t j = 0; j < n; ++j) {
        LpBound<T> b = p.bounds.empty() ? LpBound<T>{} : p.bounds[j];
        if (b.lower) {
            offset[j] = *b.lower;
            pieces[j].push_back({nstd, +1});
            if (b.upper) {
                if (*b.upper < *b.lower) return detail::status_only<T>(LpStatus::infeasible);
                upper_rows.emplace_back(nstd, *b.upper - *b.lower);
            }
            ++nstd;
        } else if (b.upper) {
            offset[j] = *b.upper;
            pieces[j].push_back({nstd++, -1});
        } else {
            pieces[j].push_back({nstd++, +1});
            pieces[j].push_back({nstd++, -1});
        }
    }

    const std::size_t m_eq = p.eq_rows.size();
    const std::size_t m_le = p.le_rows.size();
    const std::size_t m_ub = upper_rows.size();
    const std::size_t m = m_eq + m_le + m_ub;
    const std::size_t nslack = m_le + m_ub;
    const std::size_t nart = m;
    const std::size_t ncols = nstd + nslack + nart;

    detail::Tableau<T> tab(m, ncols);
    std::vector<int> row_sign(m, 1);
    auto fill_row = [&](std::size_t i, const std::vector<T>& row, const T& rhs) {
        T r = rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            r -= row[j] * offset[j];
            for (const Piece& pc : pieces[j]) tab.a_[i][pc.var] += pc.sign > 0 ? row[j] : T(-row[j]);
        }
        tab.a_[i][ncols] = r;
    };
    for (std::size_t i = 0; i < m_eq; ++i) fill_row(i, p.eq_rows[i], p.eq_rhs[i]);
    for (std::size_t i = 0; i < m_le; ++i) {
        fill_row(m_eq + i, p.le_rows[i], p.le_rhs[i]);
        tab.a_[m_eq + i][nstd + i] = T(1);
    }
    for (std::size_t k = 0; k < m_ub; ++k) {
        std::size_t i = m_eq + m_le + k;
        tab.a_[i][upper_rows[k].first] = T(1);
        tab.a_[i][nstd + m_le + k] = T(1);
        tab.a_[i][ncols] = upper_rows[k].second;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.a_[i][ncols] < 0) {
            row_sign[i] = -1;
            for (auto& v : tab.a_[i]) v = -v;
        }
        tab.a_[i][nstd + nslack + i] = T(1);
        tab.basis_[i] = nstd + nslack + i;
    }

    // Phase 1: maximize -sum(artificial).
    std::vector<T> cost1(ncols, T(0));
    for (std::size_t k = 0; k < nart; ++k) cost1[nstd + nslack + k] = T(-1);
    tab.set_costs(cost1);
    tab.optimize(ncols);
    if (Tol::negative(tab.obj_.back())) return detail::status_only<T>(LpStatus::infeasible);

    const std::size_t first_art = nstd + nslack;
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis_[i] < first_art) continue;
        for (std::size_t j = 0; j < first_art; ++j) {
            if (Tol::positive(tab.a_[i][j]) || Tol::negative(tab.a_[i][j])) {
                tab.pivot(i, j);
                break;
            }
        }
        // Otherwise the row is redundant and its artificial stays basic at zero.
    }

    std::vector<T> cost2(ncols, T(0));
    for (std::size_t j = 0; j < n; ++j)
        for (const Piece& pc : pieces[j]) cost2[pc.var] += pc.sign > 0 ? p.objective[j] : T(-p.objective[j]);
    tab.set_costs(cost2);
    if (!tab.optimize(first_art)) return detail::status_only<T>(LpStatus::unbounded);

    LpResult<T> out;
    out.status = LpStatus::optimal;
    std::vector<T> xs(ncols, T(0));
    for (std::size_t i = 0; i < m; ++i) xs[tab.basis_[i]] = tab.a_[i][ncols];
    out.x.assign(n, T(0));
    out.objective = T(0);
    for (std::size_t j = 0; j < n; ++j) {
        T v = offset[j];
        for (const Piece& pc : pieces[j]) v += pc.sign > 0 ? xs[pc.var] : T(-xs[pc.var]);
        out.x[j] = v;
        out.objective += p.objective[j] * v;
    }
    // y_i = (c_B B^-1)_i sits in the reduced-cost entry of artificial column i.
    auto dual = [&](std::size_t i) { return row_sign[i] > 0 ? tab.obj_[first_art + i] : T(-tab.obj_[first_art + i]); };
    for (std::size_t i = 0; i < m_eq; ++i) out.eq_duals.push_back(dual(i));
    for (std::size_t i = 0; i < m_le; ++i) out.le_duals.push_back(dual(m_eq + i));
    return out;
}

}  // namespace hypertheta
