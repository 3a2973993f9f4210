#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "gframe/family.hpp"
#include "gframe/types.hpp"

namespace gframe {

/// Classification of one family (or flattened vector family) at tolerance tau.
///
/// Flag semantics, all computed from the weighted synthesis matrix T~ (n x D)
/// and the frame operator S:
///   bessel            always true in the finite model; upper_bound carries B
///   frame             lambda_min(S) > tau
///   tight             frame and (B - A) <= tau * max(B, 1), or parseval
///   parseval          frame and ||S - I|| <= tau
///   complete          rank(T~) == n at threshold tau * sigma_max(T~)
///   riesz_basis       D == n, sigma_min(T~) > tau, frame and complete
///   orthonormal_system ||T~^* T~ - I_D|| <= tau
///   orthonormal_basis orthonormal_system and parseval
///
/// The conjunctions keep the implication chain parseval => tight => frame =>
/// bessel and riesz => frame and complete true for every input.
struct FrameCertificate {
  std::size_t ambient_dim = 0;
  std::size_t coefficient_dim = 0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::size_t rank = 0;
  double sigma_min = 0.0;  ///< smallest of the n leading singular values of T~
  double sigma_max = 0.0;
  bool is_bessel = true;
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  bool is_complete = false;
  bool is_riesz_basis = false;
  bool is_orthonormal_system = false;
  bool is_orthonormal_basis = false;
  /// Keys: "parseval", "tight", "orthonormal_system", "unitary", plus
  /// "pointwise_orthonormal" on vector families.
  std::map<std::string, double> defects;
  double tolerance = kDefaultTolerance;

  friend bool operator==(const FrameCertificate&, const FrameCertificate&) = default;
};

FrameCertificate certify(const GFrameFamily& family, double tol = kDefaultTolerance);

struct CompletenessResult {
  bool is_complete = false;
  std::size_t rank = 0;
};

namespace detail {

/// Shared classifier for g-families and c-frames. `frame_op` must be the
/// Hermitian n x n frame operator matching `synthesis`.
FrameCertificate classify(const Matrix& synthesis, const Matrix& frame_op, double tol);

CompletenessResult completeness_from_synthesis(const Matrix& synthesis, double tol);

}  // namespace detail

}  // namespace gframe
