#include "gframe/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <numbers>

#include "gframe/certificate.hpp"
#include "gframe/errors.hpp"
#include "gframe/factorization.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

namespace {

void require_square(const Matrix& v) {
  if (v.rows() != v.cols() || v.size() == 0) throw Error(Errc::kShapeMismatch, "expected a non-empty square matrix");
}

// exp(i theta) for theta = arccos(c), c clamped to [-1, 1]. sqrt(1 - c^2) turns
// one ulp of rounding near |c| = 1 into ~1e-8, so such c are snapped to +-1.
Complex unit_phase(double c) {
  c = std::clamp(c, -1.0, 1.0);
  if (1.0 - std::abs(c) <= 8.0 * std::numeric_limits<double>::epsilon()) c = std::copysign(1.0, c);
  return {c, std::sqrt(std::max(0.0, 1.0 - c * c))};
}

struct Svd {
  Matrix left;
  RealVector sigma;
  Matrix right;
};

Svd full_svd(const Matrix& v) {
  Eigen::JacobiSVD<Matrix> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

Matrix identity_like(const Matrix& v) { return Matrix::Identity(v.rows(), v.cols()); }

// W diag(phases) X^*
Matrix rotate(const Svd& svd, const Vector& phases) {
  return svd.left * phases.asDiagonal() * svd.right.adjoint();
}

void require_frame(const GFrameFamily& family, double tol) {
  const FrameCertificate cert = certify(family, tol);
  if (!cert.is_frame) {
    throw Error(Errc::kNotAFrame, "lower frame bound " + std::to_string(cert.lower_bound) + " <= tolerance");
  }
}

std::vector<GFrameFamily> compose_all(const GFrameFamily& basis, const std::vector<Matrix>& ops) {
  std::vector<GFrameFamily> parts;
  parts.reserve(ops.size());
  for (const auto& op : ops) parts.push_back(compose(basis, op));
  return parts;
}

}  // namespace

PolarParts polar_decompose(const Matrix& v) {
  require_square(v);
  if (spectral_norm(v) == 0.0) return {identity_like(v), Matrix::Zero(v.rows(), v.cols())};
  const Svd svd = full_svd(v);
  PolarParts parts;
  parts.unitary = svd.left * svd.right.adjoint();
  parts.positive = hermitian_part(svd.right * svd.sigma.cast<Complex>().asDiagonal() * svd.right.adjoint());
  return parts;
}

Matrix selfadjoint_to_unitary(const Matrix& p, double tol) {
  require_tolerance(tol);
  require_square(p);
  const double asymmetry = spectral_norm(p - p.adjoint());
  if (asymmetry > tol) throw Error(Errc::kNotSelfAdjoint, "||P - P^*|| = " + std::to_string(asymmetry));
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(p));
  const RealVector& lambda = eig.eigenvalues();
  const double radius = lambda.cwiseAbs().maxCoeff();
  if (radius > 1.0 + tol) throw Error(Errc::kNormExceedsOne, "spectral radius " + std::to_string(radius));
  Vector phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) phases(i) = unit_phase(lambda(i));
  const Matrix& q = eig.eigenvectors();
  return q * phases.asDiagonal() * q.adjoint();
}

Matrix UnitaryCombo::reconstruct() const {
  Matrix sum = Matrix::Zero(unitaries.front().rows(), unitaries.front().cols());
  for (const auto& u : unitaries) sum += u;
  return alpha * sum;
}

UnitaryCombo two_unitary_combination(const Matrix& v) {
  require_square(v);
  const Svd svd = full_svd(v);
  const double norm = svd.sigma(0);
  UnitaryCombo combo;
  combo.sigma_min = svd.sigma(svd.sigma.size() - 1);
  if (norm == 0.0) {
    combo.unitaries = {identity_like(v), identity_like(v)};
    return combo;
  }
  combo.alpha = norm / 2.0;
  Vector phases(svd.sigma.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = unit_phase(svd.sigma(i) / norm);
  combo.unitaries = {rotate(svd, phases), rotate(svd, phases.conjugate())};
  return combo;
}

UnitaryCombo three_unitary_combination(const Matrix& v) {
  require_square(v);
  const Svd svd = full_svd(v);
  const double norm = svd.sigma(0);
  UnitaryCombo combo;
  combo.sigma_min = svd.sigma(svd.sigma.size() - 1);
  if (norm == 0.0) {
    combo.unitaries = {identity_like(v), identity_like(v), identity_like(v)};
    return combo;
  }
  combo.alpha = norm;
  // Third term fixed at -W X^*, so each pair of conjugate phases must sum to sigma + 1.
  Vector phases(svd.sigma.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = unit_phase((svd.sigma(i) / norm + 1.0) / 2.0);
  combo.unitaries = {rotate(svd, phases), rotate(svd, phases.conjugate()),
                     -(svd.left * svd.right.adjoint())};
  return combo;
}

std::string_view split_kind_name(SplitKind kind) {
  switch (kind) {
    case SplitKind::kParsevalPair: return "parseval-pair";
    case SplitKind::kThreeOnb: return "three-onb";
    case SplitKind::kTwoOnbCombo: return "two-onb";
    case SplitKind::kOnbPlusRiesz: return "onb-riesz";
  }
  return "unknown";
}

SplitKind parse_split_kind(std::string_view name) {
  for (SplitKind k : {SplitKind::kParsevalPair, SplitKind::kThreeOnb, SplitKind::kTwoOnbCombo, SplitKind::kOnbPlusRiesz}) {
    if (split_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown split kind '" + std::string(name) + "'");
}

std::string_view declared_class_name(DeclaredClass c) {
  switch (c) {
    case DeclaredClass::kParseval: return "parseval";
    case DeclaredClass::kOrthonormalBasis: return "orthonormal_basis";
    case DeclaredClass::kRieszBasis: return "riesz_basis";
  }
  return "unknown";
}

GFrameFamily FrameSplit::reconstruct() const { return linear_combination(coefficients, parts); }

FrameSplit parseval_pair_split(const GFrameFamily& family, const GFrameFamily& basis, double tol) {
  const TransitionReport t = transition_operator(family, basis, tol);
  require_frame(family, tol);
  const PolarParts polar = polar_decompose(t.v);
  const double norm = t.classification.sigma_max;
  const Matrix w = selfadjoint_to_unitary(polar.positive / norm, tol);

  FrameSplit out{SplitKind::kParsevalPair, {}, {}, {}, t.v, std::nullopt, {}};
  out.parts = compose_all(basis, {polar.unitary * w, polar.unitary * w.adjoint()});
  out.coefficients = {Complex(norm / 2.0), Complex(norm / 2.0)};
  out.declared = {DeclaredClass::kParseval, DeclaredClass::kParseval};
  return out;
}

FrameSplit three_onb_split(const GFrameFamily& family, const GFrameFamily& basis, double tol) {
  const TransitionReport t = transition_operator(family, basis, tol);
  require_frame(family, tol);
  const UnitaryCombo combo = three_unitary_combination(t.v);

  FrameSplit out{SplitKind::kThreeOnb, {}, {}, {}, t.v, std::nullopt, {}};
  out.parts = compose_all(basis, combo.unitaries);
  out.coefficients.assign(3, Complex(combo.alpha));
  out.declared.assign(3, DeclaredClass::kOrthonormalBasis);
  return out;
}

FrameSplit riesz_two_onb_split(const GFrameFamily& family, const GFrameFamily& basis, double tol) {
  const TransitionReport t = transition_operator(family, basis, tol);
  if (!certify(family, tol).is_riesz_basis) throw Error(Errc::kNotRieszBasis, "family is not a Riesz basis");
  const UnitaryCombo combo = two_unitary_combination(t.v);

  FrameSplit out{SplitKind::kTwoOnbCombo, {}, {}, {}, t.v, std::nullopt, {}};
  out.parts = compose_all(basis, combo.unitaries);
  out.coefficients.assign(2, Complex(combo.alpha));
  out.declared.assign(2, DeclaredClass::kOrthonormalBasis);
  if (std::abs(combo.alpha - 1.0) > tol) {
    out.notes.push_back("linear combination with coefficients a = b = " + std::to_string(combo.alpha) +
                        "; a plain sum of two orthonormal bases requires ||V|| = 2");
  }
  return out;
}

FrameSplit onb_plus_riesz_split(const GFrameFamily& family, const GFrameFamily& basis, double tol) {
  const TransitionReport t = transition_operator(family, basis, tol);
  require_frame(family, tol);

  Eigen::ComplexEigenSolver<Matrix> eig(t.v, false);
  const Vector& spectrum = eig.eigenvalues();
  constexpr int kGridSize = 360;
  double best_theta = 0.0;
  double best_distance = -1.0;
  for (int k = 0; k < kGridSize; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / kGridSize;
    const Complex z = std::polar(1.0, theta);
    double distance = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) distance = std::min(distance, std::abs(z - spectrum(i)));
    if (distance > best_distance) {
      best_distance = distance;
      best_theta = theta;
    }
  }
  if (best_distance <= tol) {
    throw Error(Errc::kDegenerateSpectrumGrid, "every grid point lies within tolerance of the spectrum");
  }

  const Complex z = std::polar(1.0, best_theta);
  const Matrix shift = z * identity_like(t.v);
  FrameSplit out{SplitKind::kOnbPlusRiesz, {}, {}, {}, t.v, best_theta, {}};
  out.parts = compose_all(basis, {shift, t.v - shift});
  out.coefficients = {Complex(1.0), Complex(1.0)};
  out.declared = {DeclaredClass::kOrthonormalBasis, DeclaredClass::kRieszBasis};
  out.notes.push_back("phase " + std::to_string(best_theta) + " rad, distance to spectrum " +
                      std::to_string(best_distance));
  return out;
}

FrameSplit split(SplitKind kind, const GFrameFamily& family, const GFrameFamily& basis, double tol) {
  switch (kind) {
    case SplitKind::kParsevalPair: return parseval_pair_split(family, basis, tol);
    case SplitKind::kThreeOnb: return three_onb_split(family, basis, tol);
    case SplitKind::kTwoOnbCombo: return riesz_two_onb_split(family, basis, tol);
    case SplitKind::kOnbPlusRiesz: return onb_plus_riesz_split(family, basis, tol);
  }
  throw Error(Errc::kShapeMismatch, "unknown split kind");
}

}  // namespace gframe
