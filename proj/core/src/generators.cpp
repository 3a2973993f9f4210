#include "gframe/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gframe/errors.hpp"
#include "gframe/factorization.hpp"

namespace gframe {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, StreamPurpose purpose)
    : engine_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(purpose)))) {}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

Matrix random_gaussian_matrix(RandomStream& rng, std::size_t rows, std::size_t cols) {
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = rng.complex_normal();
  }
  return m;
}

Matrix random_unitary(RandomStream& rng, std::size_t n) {
  const Matrix a = random_gaussian_matrix(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
  const Matrix& packed = qr.matrixQR();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex r = packed(i, i);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(i) *= r / mag;
  }
  return q;
}

GFrameFamily example_2_3() {
  Matrix first(1, 2);
  first << 1.0, 0.0;
  Matrix second(1, 2);
  second << 0.0, 1.0;
  return GFrameFamily(2, MeasureSpace({1.0, 1.0}), {first, second});
}

namespace {

void check_layout(std::size_t n, const std::vector<std::size_t>& dims, const std::vector<double>& weights) {
  if (n == 0) throw Error(Errc::kLayoutMismatch, "ambient dimension must be >= 1");
  if (dims.empty()) throw Error(Errc::kLayoutMismatch, "at least one atom required");
  if (dims.size() != weights.size()) {
    throw Error(Errc::kLayoutMismatch, std::to_string(dims.size()) + " local dimensions but " +
                                           std::to_string(weights.size()) + " weights");
  }
}

std::size_t total_dim(const std::vector<std::size_t>& dims) {
  std::size_t total = 0;
  for (std::size_t d : dims) total += d;
  return total;
}

// Blocks Lambda_j = rows_j(m) / sqrt(mu_j), so that sum_j mu_j Lambda_j^* Lambda_j = m^* m.
GFrameFamily partition_rows(const Matrix& m, const std::vector<std::size_t>& dims, const std::vector<double>& weights) {
  MeasureSpace mu(weights);
  std::vector<Matrix> blocks;
  blocks.reserve(dims.size());
  Eigen::Index offset = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const auto d = static_cast<Eigen::Index>(dims[j]);
    blocks.emplace_back(m.middleRows(offset, d) / std::sqrt(weights[j]));
    offset += d;
  }
  return GFrameFamily(static_cast<std::size_t>(m.cols()), std::move(mu), std::move(blocks));
}

void check_bounds(std::size_t n, double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower > 0.0) || lower > upper) {
    throw Error(Errc::kInvalidBounds, "need 0 < A <= B, got A=" + std::to_string(lower) + " B=" + std::to_string(upper));
  }
  if (n == 1 && lower != upper) throw Error(Errc::kInvalidBounds, "a one-dimensional frame is always tight");
}

// sqrt(A) = s_1 <= ... <= s_n = sqrt(B), interior log-uniform.
RealVector pinned_singular_values(std::uint64_t seed, std::size_t n, double lower, double upper) {
  RandomStream rng(seed, StreamPurpose::kSpectrum);
  const double lo = std::log(std::sqrt(lower));
  const double hi = std::log(std::sqrt(upper));
  std::vector<double> s(n);
  s.front() = std::sqrt(lower);
  s.back() = std::sqrt(upper);
  for (std::size_t i = 1; i + 1 < n; ++i) s[i] = std::exp(lo + rng.uniform() * (hi - lo));
  std::sort(s.begin(), s.end());
  return Eigen::Map<RealVector>(s.data(), static_cast<Eigen::Index>(n));
}

}  // namespace

GFrameFamily random_onb(std::uint64_t seed, std::size_t n, const std::vector<std::size_t>& dims,
                        const std::vector<double>& weights) {
  check_layout(n, dims, weights);
  if (total_dim(dims) != n) {
    throw Error(Errc::kLayoutMismatch, "an orthonormal basis needs sum of local dimensions == ambient dimension");
  }
  RandomStream rng(seed, StreamPurpose::kBasis);
  return partition_rows(random_unitary(rng, n), dims, weights);
}

GFrameFamily random_frame_with_bounds(std::uint64_t seed, std::size_t n, const std::vector<std::size_t>& dims,
                                      const std::vector<double>& weights, double lower, double upper) {
  check_layout(n, dims, weights);
  check_bounds(n, lower, upper);
  const std::size_t d = total_dim(dims);
  if (d < n) throw Error(Errc::kLayoutMismatch, "a frame needs sum of local dimensions >= ambient dimension");

  const RealVector s = pinned_singular_values(seed, n, lower, upper);
  RandomStream right_rng(seed, StreamPurpose::kRightUnitary);
  const Matrix right = random_unitary(right_rng, n);
  RandomStream left_rng(seed, StreamPurpose::kLeftUnitary);

  if (d == n) {
    const Matrix v = random_unitary(left_rng, n) * s.cast<Complex>().asDiagonal() * right.adjoint();
    return compose(random_onb(seed, n, dims, weights), v);
  }
  const Matrix tall =
      random_unitary(left_rng, d).leftCols(static_cast<Eigen::Index>(n)) * s.cast<Complex>().asDiagonal() *
      right.adjoint();
  return partition_rows(tall, dims, weights);
}

GFrameFamily incomplete_family(std::uint64_t seed, std::size_t n, const std::vector<std::size_t>& dims,
                               const std::vector<double>& weights) {
  check_layout(n, dims, weights);
  if (n < 2) throw Error(Errc::kLayoutMismatch, "an incomplete family needs ambient dimension >= 2");
  RandomStream entries(seed, StreamPurpose::kEntries);
  const Matrix m = random_gaussian_matrix(entries, total_dim(dims), n);
  RandomStream kernel(seed, StreamPurpose::kKernel);
  Vector v = random_gaussian_matrix(kernel, n, 1).col(0);
  v.normalize();
  const Matrix projector = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) - v * v.adjoint();
  return partition_rows(m * projector, dims, weights);
}

LocalBases random_local_bases(std::uint64_t seed, const LocalDims& dims) {
  RandomStream rng(seed, StreamPurpose::kLocalBases);
  LocalBases e;
  e.bases.reserve(dims.atom_count());
  for (std::size_t d : dims.dims()) e.bases.push_back(random_unitary(rng, d));
  return e;
}

std::string_view target_class_name(TargetClass c) {
  switch (c) {
    case TargetClass::kOrthonormalBasis: return "onb";
    case TargetClass::kParseval: return "parseval";
    case TargetClass::kTight: return "tight";
    case TargetClass::kFrame: return "frame";
    case TargetClass::kRiesz: return "riesz";
    case TargetClass::kIncomplete: return "incomplete";
  }
  return "unknown";
}

TargetClass parse_target_class(std::string_view name) {
  if (name == "orthonormal_basis") return TargetClass::kOrthonormalBasis;
  for (TargetClass c : {TargetClass::kOrthonormalBasis, TargetClass::kParseval, TargetClass::kTight,
                        TargetClass::kFrame, TargetClass::kRiesz, TargetClass::kIncomplete}) {
    if (target_class_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown target class '" + std::string(name) + "'");
}

void GeneratorSpec::validate() const {
  std::vector<double> w = weights.empty() ? std::vector<double>(dims.size(), 1.0) : weights;
  check_layout(ambient_dim, dims, w);
  MeasureSpace check(w);
  const std::size_t d = total_dim(dims);
  switch (target) {
    case TargetClass::kOrthonormalBasis:
      if (d != ambient_dim) throw Error(Errc::kLayoutMismatch, "orthonormal basis needs D == n");
      break;
    case TargetClass::kRiesz:
      if (d != ambient_dim) throw Error(Errc::kLayoutMismatch, "Riesz basis needs D == n");
      check_bounds(ambient_dim, lower, upper);
      break;
    case TargetClass::kFrame:
      if (d < ambient_dim) throw Error(Errc::kLayoutMismatch, "frame needs D >= n");
      check_bounds(ambient_dim, lower, upper);
      break;
    case TargetClass::kTight:
      if (d < ambient_dim) throw Error(Errc::kLayoutMismatch, "frame needs D >= n");
      check_bounds(ambient_dim, lower, lower);
      break;
    case TargetClass::kParseval:
      if (d < ambient_dim) throw Error(Errc::kLayoutMismatch, "frame needs D >= n");
      break;
    case TargetClass::kIncomplete:
      if (ambient_dim < 2) throw Error(Errc::kLayoutMismatch, "incomplete family needs n >= 2");
      break;
  }
}

GFrameFamily generate(const GeneratorSpec& spec) {
  spec.validate();
  const std::vector<double> w = spec.weights.empty() ? std::vector<double>(spec.dims.size(), 1.0) : spec.weights;
  const std::size_t n = spec.ambient_dim;
  switch (spec.target) {
    case TargetClass::kOrthonormalBasis: return random_onb(spec.seed, n, spec.dims, w);
    case TargetClass::kParseval: return random_frame_with_bounds(spec.seed, n, spec.dims, w, 1.0, 1.0);
    case TargetClass::kTight: return random_frame_with_bounds(spec.seed, n, spec.dims, w, spec.lower, spec.lower);
    case TargetClass::kFrame:
    case TargetClass::kRiesz: return random_frame_with_bounds(spec.seed, n, spec.dims, w, spec.lower, spec.upper);
    case TargetClass::kIncomplete: return incomplete_family(spec.seed, n, spec.dims, w);
  }
  throw Error(Errc::kLayoutMismatch, "unknown target class");
}

}  // namespace gframe
