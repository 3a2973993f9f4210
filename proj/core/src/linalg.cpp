#include "gframe/linalg.hpp"

#include <algorithm>
#include <limits>

#include "gframe/errors.hpp"

namespace gframe {

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double spectral_norm(const Matrix& m) {
  RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

std::size_t numerical_rank(const Matrix& m, double rel_tol) {
  RealVector s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = rel_tol * s(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  return rank;
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

Matrix psd_sqrt(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::kShapeMismatch, "psd_sqrt needs a square matrix");
  if (m.size() == 0) return m;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(m));
  RealVector lambda = eig.eigenvalues();
  const double floor = -1e-12 * std::max(1.0, lambda.maxCoeff());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < floor) {
      throw Error(Errc::kNotPositiveSemidefinite, "eigenvalue " + std::to_string(lambda(i)));
    }
    lambda(i) = std::sqrt(std::max(lambda(i), 0.0));
  }
  const Matrix& q = eig.eigenvectors();
  return q * lambda.cast<Complex>().asDiagonal() * q.adjoint();
}

Matrix pseudo_inverse(const Matrix& m) {
  if (m.size() == 0) return Matrix::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  const double threshold = static_cast<double>(std::max(m.rows(), m.cols())) *
                           std::numeric_limits<double>::epsilon() * (s.size() ? s(0) : 0.0);
  RealVector inv = RealVector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) inv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

double identity_defect(const Matrix& m) {
  return spectral_norm(m - Matrix::Identity(m.rows(), m.cols()));
}

}  // namespace gframe
