#include "gframe/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "gframe/errors.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

TransitionClassification classify_transition(const Matrix& v, double tol) {
  require_tolerance(tol);
  if (v.rows() != v.cols() || v.size() == 0) throw Error(Errc::kShapeMismatch, "transition operator must be square");
  const RealVector s = singular_values(v);
  TransitionClassification c;
  c.sigma_max = s(0);
  c.sigma_min = s(s.size() - 1);
  c.lower_gram = c.sigma_min * c.sigma_min;
  c.upper_gram = c.sigma_max * c.sigma_max;
  c.isometry_defect = identity_defect(v.adjoint() * v);
  c.coisometry_defect = identity_defect(v * v.adjoint());
  c.is_injective = c.sigma_min > tol;
  c.is_invertible = c.is_injective;
  c.is_isometry = c.isometry_defect <= tol;
  c.is_unitary = c.is_isometry && c.coisometry_defect <= tol;
  return c;
}

TransitionReport transition_operator(const GFrameFamily& family, const GFrameFamily& basis, double tol) {
  require_tolerance(tol);
  if (!family.same_layout(basis)) {
    throw Error(Errc::kShapeMismatch, "family and basis must share ambient dimension, weights and local dimensions");
  }
  const FrameCertificate basis_cert = certify(basis, tol);
  if (!basis_cert.is_orthonormal_basis) {
    throw Error(Errc::kNotOrthonormalBasis,
                "basis defect " + std::to_string(basis_cert.defects.at("unitary")) + " exceeds tolerance");
  }

  const auto n = static_cast<Eigen::Index>(family.ambient_dim());
  TransitionReport report;
  report.v = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < family.atom_count(); ++j) {
    report.v += family.measure().weight(j) * (basis.block(j).adjoint() * family.block(j));
  }
  for (std::size_t j = 0; j < family.atom_count(); ++j) {
    report.residual = std::max(report.residual, spectral_norm(family.block(j) - basis.block(j) * report.v));
  }
  report.classification = classify_transition(report.v, tol);
  return report;
}

GFrameFamily compose(const GFrameFamily& family, const Matrix& v) {
  const auto n = static_cast<Eigen::Index>(family.ambient_dim());
  if (v.rows() != n || v.cols() != n) throw Error(Errc::kShapeMismatch, "composition operator must be n x n");
  std::vector<Matrix> blocks;
  blocks.reserve(family.atom_count());
  for (const auto& block : family.blocks()) blocks.emplace_back(block * v);
  return GFrameFamily(family.ambient_dim(), family.measure(), std::move(blocks));
}

CompletenessResult completeness_check(const GFrameFamily& family, double tol) {
  return detail::completeness_from_synthesis(synthesis_matrix(family), tol);
}

CompositionTheoremReport verify_composition_theorems(const GFrameFamily& basis, const Matrix& v, double tol) {
  const GFrameFamily family = compose(basis, v);
  CompositionTheoremReport r;
  r.recovered = transition_operator(family, basis, tol);
  r.certificate = certify(family, tol);
  r.classification = classify_transition(v, tol);

  const auto& cert = r.certificate;
  const auto& cls = r.classification;
  r.parseval_iff_isometry = cert.is_parseval == cls.is_isometry;
  const double scale = 1e-9 * std::max(1.0, cls.upper_gram);
  r.bounds_match_gram = std::abs(cert.lower_bound - cls.lower_gram) <= scale &&
                        std::abs(cert.upper_bound - cls.upper_gram) <= scale;
  r.orthonormal_iff_unitary = cert.is_orthonormal_basis == cls.is_unitary;
  r.riesz_iff_invertible = cert.is_riesz_basis == cls.is_invertible;
  return r;
}

}  // namespace gframe
