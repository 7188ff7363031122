#include "hypertheta/linalg.hpp"

#include <cmath>
#include <limits>

#include "hypertheta/error.hpp"

namespace hypertheta {

SymMatrix::SymMatrix(const Eigen::MatrixXd& m, double asym_tol) {
    if (m.rows() != m.cols()) throw InputError("symmetric matrix must be square");
    if (m.size() > 0) {
        double scale = 1.0 + m.cwiseAbs().maxCoeff();
        double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
        if (asym > asym_tol * scale) throw InputError("matrix is not symmetric (asymmetry " + std::to_string(asym) + ")");
    }
    m_ = 0.5 * (m + m.transpose());
}

EigenDecomposition eig_sym(const SymMatrix& m) {
    if (!m.dense().allFinite()) throw InputError("eig_sym: matrix has non-finite entries");
    if (m.dim() == 0) return {Eigen::VectorXd(0), Eigen::MatrixXd(0, 0)};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense());
    if (es.info() != Eigen::Success) throw SolverError("eig_sym: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

double min_eigenvalue(const SymMatrix& m) {
    if (m.dim() == 0) return std::numeric_limits<double>::infinity();
    if (!m.dense().allFinite()) throw InputError("min_eigenvalue: matrix has non-finite entries");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

}  // namespace hypertheta
