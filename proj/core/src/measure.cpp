#include "gframe/measure.hpp"

#include <cmath>

#include "gframe/errors.hpp"

namespace gframe {

MeasureSpace::MeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(Errc::kEmptyMeasure, "a measure space needs at least one atom");
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (!std::isfinite(weights_[j]) || weights_[j] <= 0.0) {
      throw Error(Errc::kNonPositiveWeight, "weight " + std::to_string(weights_[j]), j);
    }
  }
}

MeasureSpace make_measure_space(std::vector<double> weights) { return MeasureSpace(std::move(weights)); }

LocalDims::LocalDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  offsets_.reserve(dims_.size());
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (dims_[j] == 0) throw Error(Errc::kInvalidDimension, "local dimension must be >= 1", j);
    offsets_.push_back(total_);
    total_ += dims_[j];
  }
}

bool DirectIntegralVector::matches(const LocalDims& dims) const {
  if (blocks.size() != dims.atom_count()) return false;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (static_cast<std::size_t>(blocks[j].size()) != dims[j]) return false;
  }
  return true;
}

DirectIntegralVector DirectIntegralVector::zeros(const LocalDims& dims) {
  DirectIntegralVector v;
  v.blocks.reserve(dims.atom_count());
  for (std::size_t d : dims.dims()) v.blocks.push_back(Vector::Zero(static_cast<Eigen::Index>(d)));
  return v;
}

Complex di_inner(const DirectIntegralVector& f, const DirectIntegralVector& g, const MeasureSpace& mu) {
  if (f.atom_count() != mu.atom_count() || g.atom_count() != mu.atom_count()) {
    throw Error(Errc::kShapeMismatch, "block count differs from atom count");
  }
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < mu.atom_count(); ++j) {
    if (f.blocks[j].size() != g.blocks[j].size()) {
      throw Error(Errc::kShapeMismatch, "local vector lengths differ", j);
    }
    // <f_j, g_j> = g_j^* f_j; Eigen's dot conjugates its left operand.
    sum += mu.weight(j) * g.blocks[j].dot(f.blocks[j]);
  }
  return sum;
}

Vector weighted_embedding(const DirectIntegralVector& f, const MeasureSpace& mu) {
  if (f.atom_count() != mu.atom_count()) throw Error(Errc::kShapeMismatch, "block count differs from atom count");
  Eigen::Index total = 0;
  for (const auto& b : f.blocks) total += b.size();
  Vector out(total);
  Eigen::Index offset = 0;
  for (std::size_t j = 0; j < f.atom_count(); ++j) {
    const auto len = f.blocks[j].size();
    out.segment(offset, len) = std::sqrt(mu.weight(j)) * f.blocks[j];
    offset += len;
  }
  return out;
}

DirectIntegralVector from_weighted_embedding(const Vector& x, const LocalDims& dims, const MeasureSpace& mu) {
  if (dims.atom_count() != mu.atom_count() || static_cast<std::size_t>(x.size()) != dims.total()) {
    throw Error(Errc::kShapeMismatch, "embedding length does not match the layout");
  }
  DirectIntegralVector f;
  f.blocks.reserve(dims.atom_count());
  for (std::size_t j = 0; j < dims.atom_count(); ++j) {
    const auto off = static_cast<Eigen::Index>(dims.offset(j));
    const auto len = static_cast<Eigen::Index>(dims[j]);
    f.blocks.emplace_back(x.segment(off, len) / std::sqrt(mu.weight(j)));
  }
  return f;
}

}  // namespace gframe
