#pragma once

// Block-diagonal semidefinite programs with linear equality constraints.
//
//   primal   maximize <C, X>   s.t.  <A_i, X> = b_i,  X = diag(X_1, ..., X_k) PSD
//   dual     minimize b.y      s.t.  sum_i y_i A_i - C = Z PSD
//
// Coefficients are given per scalar entry X_k(i, j); an off-diagonal entry is
// one variable shared by (i, j) and (j, i), so add_term(c, k, i, j, 1.0)
// contributes exactly X_k(i, j) to constraint c.

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

namespace hypertheta {

struct SdpEntry {
    int block;
    int row;  ///< row <= col
    int col;
    double value;
};

class SdpProblem {
public:
    SdpProblem() = default;
    explicit SdpProblem(std::vector<int> block_dims);

    int add_block(int dim);
    void add_objective(int block, int i, int j, double coef);
    int add_constraint(double rhs);
    void add_term(int constraint, int block, int i, int j, double coef);

    int block_count() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& block_dims() const { return dims_; }
    int constraint_count() const { return static_cast<int>(rhs_.size()); }
    const std::vector<SdpEntry>& objective() const { return objective_; }
    const std::vector<SdpEntry>& constraint(int c) const { return constraints_[static_cast<std::size_t>(c)]; }
    double rhs(int c) const { return rhs_[static_cast<std::size_t>(c)]; }

    /// <C, X> for a candidate block-diagonal point.
    double objective_value(const std::vector<Eigen::MatrixXd>& x) const;
    /// <A_c, X> - b_c.
    double residual(int c, const std::vector<Eigen::MatrixXd>& x) const;

private:
    void check_entry(int block, int i, int j) const;

    std::vector<int> dims_;
    std::vector<SdpEntry> objective_;
    std::vector<std::vector<SdpEntry>> constraints_;
    std::vector<double> rhs_;
};

struct SdpOptions {
    double gap_tol = 1e-8;       ///< relative duality gap
    double feas_tol = 1e-8;      ///< relative primal and dual infeasibility
    double psd_tol = 1e-9;       ///< allowed negative eigenvalue of reported primal blocks
    double presolve_tol = 1e-10; ///< dependent-constraint threshold
    int max_iterations = 120;
};

enum class SdpStatus { optimal, infeasible, numerical_failure };

const char* to_string(SdpStatus s);

struct SdpSolution {
    SdpStatus status = SdpStatus::numerical_failure;
    std::vector<Eigen::MatrixXd> primal;      ///< X blocks
    std::vector<Eigen::MatrixXd> dual_slack;  ///< Z blocks
    Eigen::VectorXd dual;                     ///< y, one entry per original constraint
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double relative_gap = 0.0;
    double primal_infeasibility = 0.0;
    double dual_infeasibility = 0.0;
    int iterations = 0;
    int dropped_constraints = 0;
    std::string message;
};

/// Primal-dual interior-point method with Nesterov-Todd scaling and a
/// Mehrotra predictor-corrector step. Dense blocks; desk-scale problems.
SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

}  // namespace hypertheta
