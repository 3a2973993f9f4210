#pragma once

#include "gframe/certificate.hpp"
#include "gframe/family.hpp"
#include "gframe/types.hpp"

namespace gframe {

/// Flags of a square operator V against tolerance tau.
struct TransitionClassification {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double lower_gram = 0.0;  ///< sigma_min^2, the best alpha in ||Vf||^2 >= alpha ||f||^2
  double upper_gram = 0.0;  ///< sigma_max^2
  double isometry_defect = 0.0;  ///< ||V^*V - I||
  double coisometry_defect = 0.0;  ///< ||VV^* - I||
  bool is_isometry = false;
  bool is_unitary = false;
  bool is_injective = false;
  /// Square V: invertible, injective and "V^* onto" coincide.
  bool is_invertible = false;

  double alpha() const noexcept { return lower_gram; }
};

TransitionClassification classify_transition(const Matrix& v, double tol = kDefaultTolerance);

struct TransitionReport {
  Matrix v;
  /// max_j ||Lambda_j - Theta_j V||_2
  double residual = 0.0;
  TransitionClassification classification;
};

/// V = sum_j mu_j Theta_j^* Lambda_j for an orthonormal basis Theta, so that
/// Lambda_j = Theta_j V. Throws ShapeMismatch on differing layouts and
/// NotOrthonormalBasis if Theta fails certification at `tol`.
TransitionReport transition_operator(const GFrameFamily& family, const GFrameFamily& basis,
                                     double tol = kDefaultTolerance);

/// Family with blocks Lambda_j V. V must be n x n.
GFrameFamily compose(const GFrameFamily& family, const Matrix& v);

CompletenessResult completeness_check(const GFrameFamily& family, double tol = kDefaultTolerance);

/// Outcome of checking the four composition theorems on Lambda = Theta o V.
struct CompositionTheoremReport {
  FrameCertificate certificate;
  TransitionClassification classification;
  TransitionReport recovered;
  bool parseval_iff_isometry = false;
  /// |A - sigma_min(V)^2| and |B - sigma_max(V)^2| within 1e-9 * max(1, sigma_max^2).
  bool bounds_match_gram = false;
  bool orthonormal_iff_unitary = false;
  bool riesz_iff_invertible = false;

  bool all_hold() const noexcept {
    return parseval_iff_isometry && bounds_match_gram && orthonormal_iff_unitary && riesz_iff_invertible;
  }
};

CompositionTheoremReport verify_composition_theorems(const GFrameFamily& basis, const Matrix& v,
                                                     double tol = kDefaultTolerance);

}  // namespace gframe
