#pragma once

#include <Eigen/Dense>

namespace hypertheta {

/// Dense symmetric matrix. Construction rejects inputs whose largest
/// asymmetry exceeds `asym_tol * (1 + max|entry|)` and symmetrizes the rest.
class SymMatrix {
public:
    explicit SymMatrix(const Eigen::MatrixXd& m, double asym_tol = 1e-12);

    static SymMatrix zero(int n) { return SymMatrix(Eigen::MatrixXd::Zero(n, n)); }

    int dim() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& dense() const { return m_; }

private:
    Eigen::MatrixXd m_;
};

struct EigenDecomposition {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< orthonormal columns, vectors.col(k) pairs with values(k)
};

EigenDecomposition eig_sym(const SymMatrix& m);

/// Smallest eigenvalue; +inf for a 0x0 matrix.
double min_eigenvalue(const SymMatrix& m);

}  // namespace hypertheta
