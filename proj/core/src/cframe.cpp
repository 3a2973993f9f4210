#include "gframe/cframe.hpp"

#include <algorithm>
#include <cmath>

#include "gframe/errors.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

CFrame::CFrame(std::size_t ambient_dim, std::vector<CFrameItem> items) : n_(ambient_dim), items_(std::move(items)) {
  if (n_ == 0) throw Error(Errc::kInvalidDimension, "ambient dimension must be >= 1");
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& item = items_[i];
    if (!std::isfinite(item.weight) || item.weight <= 0.0) {
      throw Error(Errc::kNonPositiveWeight, "item weight " + std::to_string(item.weight), i);
    }
    if (static_cast<std::size_t>(item.vector.size()) != n_) {
      throw Error(Errc::kShapeMismatch, "vector length differs from ambient dimension", i);
    }
    if (!item.vector.allFinite()) throw Error(Errc::kNonFiniteEntry, "vector contains NaN or inf", i);
  }
}

LocalBases LocalBases::identity(const LocalDims& dims) {
  LocalBases e;
  e.bases.reserve(dims.atom_count());
  for (std::size_t d : dims.dims()) {
    const auto k = static_cast<Eigen::Index>(d);
    e.bases.push_back(Matrix::Identity(k, k));
  }
  return e;
}

CFrame induce(const GFrameFamily& family, const LocalBases& bases, double tol) {
  require_tolerance(tol);
  if (bases.bases.size() != family.atom_count()) {
    throw Error(Errc::kShapeMismatch, "one local basis per atom required");
  }
  std::vector<CFrameItem> items;
  items.reserve(family.coefficient_dim());
  for (std::size_t j = 0; j < family.atom_count(); ++j) {
    const Matrix& e = bases.bases[j];
    const auto d = static_cast<Eigen::Index>(family.dims()[j]);
    if (e.rows() != d || e.cols() != d) throw Error(Errc::kShapeMismatch, "local basis has the wrong size", j);
    if (identity_defect(e.adjoint() * e) > tol) throw Error(Errc::kNotUnitaryBasis, "local basis is not unitary", j);
    const Matrix u = family.block(j).adjoint() * e;
    for (Eigen::Index k = 0; k < d; ++k) {
      items.push_back({family.measure().weight(j), u.col(k), CFrameOrigin{j, static_cast<std::size_t>(k)}});
    }
  }
  return CFrame(family.ambient_dim(), std::move(items));
}

Matrix cframe_synthesis_matrix(const CFrame& frame) {
  Matrix t(static_cast<Eigen::Index>(frame.ambient_dim()), static_cast<Eigen::Index>(frame.size()));
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const auto& item = frame.item(i);
    t.col(static_cast<Eigen::Index>(i)) = std::sqrt(item.weight) * item.vector;
  }
  return t;
}

Matrix cframe_frame_operator(const CFrame& frame) {
  const auto n = static_cast<Eigen::Index>(frame.ambient_dim());
  Matrix s = Matrix::Zero(n, n);
  for (const auto& item : frame.items()) s += item.weight * (item.vector * item.vector.adjoint());
  return hermitian_part(s);
}

FrameCertificate certify_cframe(const CFrame& frame, double tol) {
  FrameCertificate cert = detail::classify(cframe_synthesis_matrix(frame), cframe_frame_operator(frame), tol);
  // For every nu: sum_i w_i <v_i, v_nu> should equal 1.
  double pointwise = 0.0;
  for (const auto& target : frame.items()) {
    Complex sum{0.0, 0.0};
    for (const auto& item : frame.items()) sum += item.weight * target.vector.dot(item.vector);
    pointwise = std::max(pointwise, std::abs(sum - 1.0));
  }
  cert.defects["pointwise_orthonormal"] = pointwise;
  return cert;
}

bool EquivalenceReport::flags_agree() const noexcept {
  return bessel_agrees && frame_agrees && tight_agrees && parseval_agrees && complete_agrees && riesz_agrees &&
         orthonormal_agrees;
}

bool EquivalenceReport::all_agree() const noexcept {
  return flags_agree() && lower_bound_diff <= tolerance && upper_bound_diff <= tolerance;
}

EquivalenceReport equivalence_report(const GFrameFamily& family, const LocalBases& bases, double tol) {
  const CFrame flat = induce(family, bases, tol);
  EquivalenceReport r;
  r.tolerance = tol;
  r.g_side = certify(family, tol);
  r.c_side = certify_cframe(flat, tol);
  r.bessel_agrees = r.g_side.is_bessel == r.c_side.is_bessel;
  r.frame_agrees = r.g_side.is_frame == r.c_side.is_frame;
  r.tight_agrees = r.g_side.is_tight == r.c_side.is_tight;
  r.parseval_agrees = r.g_side.is_parseval == r.c_side.is_parseval;
  r.complete_agrees = r.g_side.is_complete == r.c_side.is_complete;
  r.riesz_agrees = r.g_side.is_riesz_basis == r.c_side.is_riesz_basis;
  r.orthonormal_agrees = r.g_side.is_orthonormal_basis == r.c_side.is_orthonormal_basis;
  r.lower_bound_diff = std::abs(r.g_side.lower_bound - r.c_side.lower_bound);
  r.upper_bound_diff = std::abs(r.g_side.upper_bound - r.c_side.upper_bound);
  r.operator_diff = spectral_norm(frame_operator(family) - cframe_frame_operator(flat));
  return r;
}

}  // namespace gframe
