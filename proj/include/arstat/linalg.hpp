#ifndef ARSTAT_LINALG_HPP
#define ARSTAT_LINALG_HPP

#include <algorithm>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace arstat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Largest singular value.
inline double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

/// Frobenius norm of the leading `cols` columns; bounds the operator norm of that block.
inline double column_block_norm(const Matrix& m, Eigen::Index cols) {
  cols = std::min(cols, m.cols());
  if (cols <= 0) return 0.0;
  return m.leftCols(cols).norm();
}

inline bool is_hermitian(const Matrix& m, double tol) { return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm()); }

inline bool is_anti_hermitian(const Matrix& m, double tol) {
  return (m + m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

/// Dense matrix exponential (scaling and squaring with Pade approximants).
inline Matrix expm(const Matrix& m) { return m.exp(); }

/// Zero-pads `v` to length `dim`; the graded basis order makes smaller
/// truncations a leading block of larger ones.
inline Vector pad(const Vector& v, Eigen::Index dim) {
  Vector out = Vector::Zero(std::max(dim, v.size()));
  out.head(v.size()) = v;
  return out;
}

}  // namespace arstat

#endif  // ARSTAT_LINALG_HPP
