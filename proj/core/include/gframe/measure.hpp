#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gframe/types.hpp"

namespace gframe {

/// A finite atomic measure: atom j carries mass weights()[j] > 0.
/// Integrals over the index space become atom-ordered weighted sums.
class MeasureSpace {
 public:
  /// Throws NonPositiveWeight(j) for the first weight that is <= 0 or not
  /// finite, EmptyMeasure for an empty list.
  explicit MeasureSpace(std::vector<double> weights);

  std::size_t atom_count() const noexcept { return weights_.size(); }
  double weight(std::size_t j) const { return weights_.at(j); }
  std::span<const double> weights() const noexcept { return weights_; }

  friend bool operator==(const MeasureSpace&, const MeasureSpace&) = default;

 private:
  std::vector<double> weights_;
};

MeasureSpace make_measure_space(std::vector<double> weights);

/// Dimensions d_j of the local spaces, one per atom.
class LocalDims {
 public:
  explicit LocalDims(std::vector<std::size_t> dims);

  std::size_t atom_count() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t j) const { return dims_.at(j); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  /// D = sum of d_j.
  std::size_t total() const noexcept { return total_; }
  /// Offset of atom j's coordinates inside a flattened D-vector.
  std::size_t offset(std::size_t j) const { return offsets_.at(j); }

  friend bool operator==(const LocalDims& a, const LocalDims& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// Element of the weighted direct sum of the local spaces: one local vector per atom.
struct DirectIntegralVector {
  std::vector<Vector> blocks;

  std::size_t atom_count() const noexcept { return blocks.size(); }
  bool matches(const LocalDims& dims) const;
  static DirectIntegralVector zeros(const LocalDims& dims);
};

/// sum_j mu_j <f_j, g_j>, conjugate-linear in g.
Complex di_inner(const DirectIntegralVector& f, const DirectIntegralVector& g, const MeasureSpace& mu);

/// (Jf)_j = sqrt(mu_j) f_j, flattened to a D-vector. Norm preserving.
Vector weighted_embedding(const DirectIntegralVector& f, const MeasureSpace& mu);

/// Inverse of weighted_embedding for the given layout.
DirectIntegralVector from_weighted_embedding(const Vector& x, const LocalDims& dims, const MeasureSpace& mu);

}  // namespace gframe
