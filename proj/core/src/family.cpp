#include "gframe/family.hpp"

#include <cmath>

#include "gframe/errors.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

namespace {

LocalDims dims_from_blocks(const std::vector<Matrix>& blocks) {
  std::vector<std::size_t> dims;
  dims.reserve(blocks.size());
  for (const auto& b : blocks) dims.push_back(static_cast<std::size_t>(b.rows()));
  return LocalDims(std::move(dims));
}

}  // namespace

GFrameFamily::GFrameFamily(std::size_t ambient_dim, MeasureSpace measure, std::vector<Matrix> blocks)
    : n_(ambient_dim), measure_(std::move(measure)), dims_(dims_from_blocks(blocks)), blocks_(std::move(blocks)) {
  if (n_ == 0) throw Error(Errc::kInvalidDimension, "ambient dimension must be >= 1");
  if (blocks_.size() != measure_.atom_count()) {
    throw Error(Errc::kShapeMismatch, std::to_string(blocks_.size()) + " blocks for " +
                                          std::to_string(measure_.atom_count()) + " atoms");
  }
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (static_cast<std::size_t>(blocks_[j].cols()) != n_) {
      throw Error(Errc::kShapeMismatch, "block has " + std::to_string(blocks_[j].cols()) + " columns, expected " +
                                            std::to_string(n_), j);
    }
    if (!blocks_[j].allFinite()) throw Error(Errc::kNonFiniteEntry, "block contains NaN or inf", j);
  }
}

bool GFrameFamily::same_layout(const GFrameFamily& other) const {
  return n_ == other.n_ && measure_ == other.measure_ && dims_ == other.dims_;
}

bool operator==(const GFrameFamily& a, const GFrameFamily& b) {
  if (!a.same_layout(b)) return false;
  for (std::size_t j = 0; j < a.blocks_.size(); ++j) {
    if (a.blocks_[j] != b.blocks_[j]) return false;
  }
  return true;
}

Vector synthesis_apply(const GFrameFamily& family, const DirectIntegralVector& phi) {
  if (!phi.matches(family.dims())) throw Error(Errc::kShapeMismatch, "coefficient layout differs from the family");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(family.ambient_dim()));
  for (std::size_t j = 0; j < family.atom_count(); ++j) {
    out += family.measure().weight(j) * (family.block(j).adjoint() * phi.blocks[j]);
  }
  return out;
}

DirectIntegralVector analysis_apply(const GFrameFamily& family, const Vector& h) {
  if (static_cast<std::size_t>(h.size()) != family.ambient_dim()) {
    throw Error(Errc::kShapeMismatch, "vector length differs from ambient dimension");
  }
  DirectIntegralVector out;
  out.blocks.reserve(family.atom_count());
  for (const auto& block : family.blocks()) out.blocks.emplace_back(block * h);
  return out;
}

Matrix synthesis_matrix(const GFrameFamily& family) {
  const auto n = static_cast<Eigen::Index>(family.ambient_dim());
  Matrix t(n, static_cast<Eigen::Index>(family.coefficient_dim()));
  for (std::size_t j = 0; j < family.atom_count(); ++j) {
    const auto off = static_cast<Eigen::Index>(family.dims().offset(j));
    const auto& block = family.block(j);
    t.middleCols(off, block.rows()) = std::sqrt(family.measure().weight(j)) * block.adjoint();
  }
  return t;
}

Matrix frame_operator(const GFrameFamily& family) {
  const auto n = static_cast<Eigen::Index>(family.ambient_dim());
  Matrix s = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < family.atom_count(); ++j) {
    const auto& block = family.block(j);
    s += family.measure().weight(j) * (block.adjoint() * block);
  }
  return hermitian_part(s);
}

BoundWitnesses frame_bound_witnesses(const GFrameFamily& family) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(frame_operator(family));
  const auto& lambda = eig.eigenvalues();
  const auto last = lambda.size() - 1;
  BoundWitnesses w;
  w.bounds.lower = std::max(lambda(0), 0.0);
  w.bounds.upper = std::max(lambda(last), 0.0);
  w.lower_vector = eig.eigenvectors().col(0);
  w.upper_vector = eig.eigenvectors().col(last);
  return w;
}

FrameBounds frame_bounds(const GFrameFamily& family) { return frame_bound_witnesses(family).bounds; }

double orthonormal_system_defect(const GFrameFamily& family) {
  const Matrix t = synthesis_matrix(family);
  return identity_defect(t.adjoint() * t);
}

GFrameFamily canonical_dual(const GFrameFamily& family, double tol) {
  require_tolerance(tol);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(frame_operator(family));
  const double lambda_min = eig.eigenvalues()(0);
  if (!(lambda_min > tol)) {
    throw Error(Errc::kNotAFrame, "lambda_min(S) = " + std::to_string(lambda_min));
  }
  const Matrix& q = eig.eigenvectors();
  const Matrix s_inv = q * eig.eigenvalues().cwiseInverse().cast<Complex>().asDiagonal() * q.adjoint();
  std::vector<Matrix> dual;
  dual.reserve(family.atom_count());
  for (const auto& block : family.blocks()) dual.emplace_back(block * s_inv);
  return GFrameFamily(family.ambient_dim(), family.measure(), std::move(dual));
}

GFrameFamily linear_combination(std::span<const Complex> coefficients, std::span<const GFrameFamily> parts) {
  if (parts.empty() || coefficients.size() != parts.size()) {
    throw Error(Errc::kShapeMismatch, "need one coefficient per part and at least one part");
  }
  const GFrameFamily& first = parts.front();
  std::vector<Matrix> blocks;
  blocks.reserve(first.atom_count());
  for (std::size_t j = 0; j < first.atom_count(); ++j) {
    blocks.push_back(Matrix::Zero(first.block(j).rows(), first.block(j).cols()));
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!parts[k].same_layout(first)) throw Error(Errc::kShapeMismatch, "parts have different layouts", k);
    for (std::size_t j = 0; j < first.atom_count(); ++j) blocks[j] += coefficients[k] * parts[k].block(j);
  }
  return GFrameFamily(first.ambient_dim(), first.measure(), std::move(blocks));
}

}  // namespace gframe
