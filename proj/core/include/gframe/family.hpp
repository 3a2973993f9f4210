#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gframe/measure.hpp"
#include "gframe/types.hpp"

namespace gframe {

/// A family of operators {Lambda_j : C^n -> C^{d_j}} indexed by the atoms of a
/// finite measure space. Block j is a d_j x n matrix.
class GFrameFamily {
 public:
  /// Local dimensions are taken from the block row counts. Throws ShapeMismatch
  /// when counts or column widths disagree, NonFiniteEntry on NaN/inf.
  GFrameFamily(std::size_t ambient_dim, MeasureSpace measure, std::vector<Matrix> blocks);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t atom_count() const noexcept { return blocks_.size(); }
  std::size_t coefficient_dim() const noexcept { return dims_.total(); }
  const MeasureSpace& measure() const noexcept { return measure_; }
  const LocalDims& dims() const noexcept { return dims_; }
  const Matrix& block(std::size_t j) const { return blocks_.at(j); }
  std::span<const Matrix> blocks() const noexcept { return blocks_; }

  /// Same ambient dimension, weights and local dimensions.
  bool same_layout(const GFrameFamily& other) const;

  friend bool operator==(const GFrameFamily& a, const GFrameFamily& b);

 private:
  std::size_t n_;
  MeasureSpace measure_;
  LocalDims dims_;
  std::vector<Matrix> blocks_;
};

/// T phi = sum_j mu_j Lambda_j^* phi_j.
Vector synthesis_apply(const GFrameFamily& family, const DirectIntegralVector& phi);

/// (T^* h)_j = Lambda_j h.
DirectIntegralVector analysis_apply(const GFrameFamily& family, const Vector& h);

/// n x D matrix [sqrt(mu_1) Lambda_1^* | ... | sqrt(mu_m) Lambda_m^*], i.e. T in
/// weighted-embedding coordinates.
Matrix synthesis_matrix(const GFrameFamily& family);

/// S = sum_j mu_j Lambda_j^* Lambda_j, summed in atom order and symmetrized.
Matrix frame_operator(const GFrameFamily& family);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Extreme eigenvalues of S; a tiny negative lower eigenvalue is reported as 0.
FrameBounds frame_bounds(const GFrameFamily& family);

/// Eigenvectors of S attaining the lower and upper bound.
struct BoundWitnesses {
  FrameBounds bounds;
  Vector lower_vector;
  Vector upper_vector;
};
BoundWitnesses frame_bound_witnesses(const GFrameFamily& family);

/// ||T~^* T~ - I_D||_2; zero exactly for orthonormal systems.
double orthonormal_system_defect(const GFrameFamily& family);

/// Dual blocks Lambda_j S^{-1}. Throws NotAFrame if lambda_min(S) <= tol.
GFrameFamily canonical_dual(const GFrameFamily& family, double tol = kDefaultTolerance);

/// sum_k c_k * parts[k], blockwise. All parts must share one layout.
GFrameFamily linear_combination(std::span<const Complex> coefficients, std::span<const GFrameFamily> parts);

}  // namespace gframe
