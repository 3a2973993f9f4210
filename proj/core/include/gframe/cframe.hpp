#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gframe/certificate.hpp"
#include "gframe/family.hpp"
#include "gframe/types.hpp"

namespace gframe {

struct CFrameOrigin {
  std::size_t atom = 0;
  std::size_t local = 0;

  friend bool operator==(const CFrameOrigin&, const CFrameOrigin&) = default;
};

struct CFrameItem {
  double weight = 1.0;
  Vector vector;
  std::optional<CFrameOrigin> origin;
};

/// Weighted family of vectors in C^n, the flattened form of a g-family.
class CFrame {
 public:
  /// Throws NonPositiveWeight(i) or ShapeMismatch.
  CFrame(std::size_t ambient_dim, std::vector<CFrameItem> items);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return items_.size(); }
  const CFrameItem& item(std::size_t i) const { return items_.at(i); }
  const std::vector<CFrameItem>& items() const noexcept { return items_; }

 private:
  std::size_t n_;
  std::vector<CFrameItem> items_;
};

/// Per-atom orthonormal bases of the local spaces; column k of matrix j is e_{j,k}.
struct LocalBases {
  std::vector<Matrix> bases;

  static LocalBases identity(const LocalDims& dims);
};

/// u_{j,k} = Lambda_j^* e_{j,k} with weight mu_j. Throws ShapeMismatch or
/// NotUnitaryBasis (||E_j^* E_j - I|| > tol).
CFrame induce(const GFrameFamily& family, const LocalBases& bases, double tol = kDefaultTolerance);

/// n x D matrix with columns sqrt(w_i) v_i.
Matrix cframe_synthesis_matrix(const CFrame& frame);

/// S = sum_i w_i v_i v_i^*.
Matrix cframe_frame_operator(const CFrame& frame);

/// Same flag semantics as certify(). Additionally records
/// defects["pointwise_orthonormal"] = max_nu |sum_i w_i <v_i, v_nu> - 1|.
FrameCertificate certify_cframe(const CFrame& frame, double tol = kDefaultTolerance);

struct EquivalenceReport {
  FrameCertificate g_side;
  FrameCertificate c_side;
  bool bessel_agrees = false;
  bool frame_agrees = false;
  bool tight_agrees = false;
  bool parseval_agrees = false;
  bool complete_agrees = false;
  bool riesz_agrees = false;
  bool orthonormal_agrees = false;
  double lower_bound_diff = 0.0;
  double upper_bound_diff = 0.0;
  double operator_diff = 0.0;  ///< ||S_g - S_c||_2
  double tolerance = kDefaultTolerance;

  bool flags_agree() const noexcept;
  bool all_agree() const noexcept;
};

EquivalenceReport equivalence_report(const GFrameFamily& family, const LocalBases& bases,
                                     double tol = kDefaultTolerance);

}  // namespace gframe
