#include "gframe/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "gframe/errors.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

namespace detail {

CompletenessResult completeness_from_synthesis(const Matrix& synthesis, double tol) {
  require_tolerance(tol);
  const std::size_t rank = numerical_rank(synthesis, tol);
  return {rank == static_cast<std::size_t>(synthesis.rows()), rank};
}

FrameCertificate classify(const Matrix& synthesis, const Matrix& frame_op, double tol) {
  require_tolerance(tol);
  const auto n = synthesis.rows();
  const auto d = synthesis.cols();

  FrameCertificate cert;
  cert.ambient_dim = static_cast<std::size_t>(n);
  cert.coefficient_dim = static_cast<std::size_t>(d);
  cert.tolerance = tol;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(frame_op, Eigen::EigenvaluesOnly);
  const double lambda_min = eig.eigenvalues()(0);
  const double lambda_max = eig.eigenvalues()(n - 1);
  cert.lower_bound = std::max(lambda_min, 0.0);
  cert.upper_bound = std::max(lambda_max, 0.0);

  const RealVector s = singular_values(synthesis);
  cert.sigma_max = s.size() ? s(0) : 0.0;
  cert.sigma_min = d >= n ? s(n - 1) : 0.0;
  cert.rank = numerical_rank(synthesis, tol);

  const double parseval_defect = std::max(std::abs(lambda_min - 1.0), std::abs(lambda_max - 1.0));
  const double tight_defect = (cert.upper_bound - cert.lower_bound) / std::max(cert.upper_bound, 1.0);
  const double ons_defect = identity_defect(synthesis.adjoint() * synthesis);
  const double coisometry_defect = identity_defect(synthesis * synthesis.adjoint());

  cert.defects["parseval"] = parseval_defect;
  cert.defects["tight"] = tight_defect;
  cert.defects["orthonormal_system"] = ons_defect;
  cert.defects["unitary"] = std::max(ons_defect, coisometry_defect);

  cert.is_bessel = true;
  cert.is_frame = lambda_min > tol;
  cert.is_parseval = cert.is_frame && parseval_defect <= tol;
  cert.is_tight = cert.is_frame && (tight_defect <= tol || cert.is_parseval);
  cert.is_complete = cert.rank == static_cast<std::size_t>(n);
  cert.is_riesz_basis = d == n && cert.sigma_min > tol && cert.is_frame && cert.is_complete;
  cert.is_orthonormal_system = ons_defect <= tol;
  cert.is_orthonormal_basis = cert.is_orthonormal_system && cert.is_parseval;
  return cert;
}

}  // namespace detail

FrameCertificate certify(const GFrameFamily& family, double tol) {
  return detail::classify(synthesis_matrix(family), frame_operator(family), tol);
}

}  // namespace gframe
