// Dense linear-algebra helpers shared by the solver and game modules.
// Free functions over Eigen expressions; Eigen is the only math dependency.
#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace xora {

inline constexpr double kSymmetryTol = 1e-10;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.derived().cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m, double tol = kSymmetryTol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.derived() - m.derived().transpose()) <= tol;
}

/// Smallest eigenvalue of a symmetric matrix. Throws on non-symmetric input.
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  if (!is_symmetric(m)) {
    throw std::invalid_argument("min_eigenvalue: matrix is not symmetric");
  }
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.derived(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Gram factorization of a PSD matrix X: returns V (n x r) with rows v_i such
/// that v_i . v_j = X_ij. Eigenvalues below `tol` are truncated; X must satisfy
/// min_eigenvalue(X) >= -tol.
template <typename Derived>
Eigen::MatrixXd gram_factor(const Eigen::MatrixBase<Derived>& x, double tol = 1e-9) {
  if (!is_symmetric(x)) {
    throw std::invalid_argument("gram_factor: matrix is not symmetric");
  }
  const Eigen::Index n = x.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.derived());
  const Eigen::VectorXd evals = es.eigenvalues();
  if (n > 0 && evals.minCoeff() < -tol) {
    throw std::invalid_argument("gram_factor: matrix is not PSD within tolerance (min eig " +
                                std::to_string(evals.minCoeff()) + ")");
  }
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (evals[k] > tol) ++r;
  }
  Eigen::MatrixXd v(n, r);
  Eigen::Index col = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (evals[k] > tol) {
      v.col(col++) = es.eigenvectors().col(k) * std::sqrt(evals[k]);
    }
  }
  return v;
}

}  // namespace xora
