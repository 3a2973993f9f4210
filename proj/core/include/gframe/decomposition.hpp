#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gframe/family.hpp"
#include "gframe/types.hpp"

namespace gframe {

/// V = U P with U unitary and P = sqrt(V^* V).
struct PolarParts {
  Matrix unitary;
  Matrix positive;
};

/// SVD route: V = W S X^* gives U = W X^*, P = X S X^*. The zero matrix maps
/// to (I, 0).
PolarParts polar_decompose(const Matrix& v);

/// W = P + i sqrt(I - P^2) for Hermitian P with spectrum in [-1, 1], so that
/// W is unitary and P = (W + W^*) / 2. Eigenvalues within tol outside [-1, 1]
/// are clamped. Throws NotSelfAdjoint or NormExceedsOne.
Matrix selfadjoint_to_unitary(const Matrix& p, double tol = kDefaultTolerance);

/// V = alpha * (U_1 + ... + U_k) with every U_i unitary.
struct UnitaryCombo {
  double alpha = 0.0;
  std::vector<Matrix> unitaries;
  /// Smallest singular value of V. Invertibility is the classical hypothesis for
  /// two-term combinations in infinite dimensions; it is reported, not enforced.
  double sigma_min = 0.0;

  Matrix reconstruct() const;
};

/// alpha = ||V|| / 2, U_{1,2} = W diag(exp(+-i theta)) X^* with cos(theta_i) = sigma_i / ||V||.
UnitaryCombo two_unitary_combination(const Matrix& v);

/// alpha = ||V||, U_{1,2} = W diag(exp(+-i theta)) X^* with
/// cos(theta_i) = (sigma_i / ||V|| + 1) / 2, U_3 = -W X^*.
UnitaryCombo three_unitary_combination(const Matrix& v);

enum class SplitKind { kParsevalPair, kThreeOnb, kTwoOnbCombo, kOnbPlusRiesz };

std::string_view split_kind_name(SplitKind kind);
/// Accepts the CLI spellings: parseval-pair, three-onb, two-onb, onb-riesz.
SplitKind parse_split_kind(std::string_view name);

enum class DeclaredClass { kParseval, kOrthonormalBasis, kRieszBasis };
std::string_view declared_class_name(DeclaredClass c);

/// Lambda = sum_k coefficients[k] * parts[k], blockwise.
struct FrameSplit {
  SplitKind kind;
  std::vector<Complex> coefficients;
  std::vector<GFrameFamily> parts;
  std::vector<DeclaredClass> declared;
  Matrix transition;
  /// theta* for kOnbPlusRiesz, the orthonormal part being Theta o (exp(i theta*) I).
  std::optional<double> phase;
  std::vector<std::string> notes;

  GFrameFamily reconstruct() const;
};

/// Two Parseval parts Theta o (U W) and Theta o (U W^*), coefficients ||V||/2 each.
FrameSplit parseval_pair_split(const GFrameFamily& family, const GFrameFamily& basis,
                               double tol = kDefaultTolerance);

/// Three orthonormal-basis parts with a shared coefficient alpha = ||V||.
FrameSplit three_onb_split(const GFrameFamily& family, const GFrameFamily& basis,
                           double tol = kDefaultTolerance);

/// Riesz basis as a*Psi + b*Gamma with orthonormal Psi, Gamma and a = b = ||V|| / 2.
FrameSplit riesz_two_onb_split(const GFrameFamily& family, const GFrameFamily& basis,
                               double tol = kDefaultTolerance);

/// Orthonormal basis Theta o (z I) plus Riesz basis Theta o (V - z I), where
/// z = exp(i theta*) is the point of a 360-step unit-circle grid farthest from
/// the spectrum of V (ties: smallest theta).
FrameSplit onb_plus_riesz_split(const GFrameFamily& family, const GFrameFamily& basis,
                                double tol = kDefaultTolerance);

FrameSplit split(SplitKind kind, const GFrameFamily& family, const GFrameFamily& basis,
                 double tol = kDefaultTolerance);

}  // namespace gframe
