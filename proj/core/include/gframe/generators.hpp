#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "gframe/cframe.hpp"
#include "gframe/family.hpp"
#include "gframe/types.hpp"

namespace gframe {

/// Independent draw streams derived from one seed. Every purpose gets its own
/// mt19937_64 seeded through splitmix64(seed, purpose), so adding draws to one
/// stream never perturbs another. Normals use Box-Muller on 53-bit uniforms,
/// which keeps the output identical across standard libraries.
enum class StreamPurpose : std::uint64_t {
  kBasis = 1,
  kLeftUnitary = 2,
  kRightUnitary = 3,
  kSpectrum = 4,
  kEntries = 5,
  kKernel = 6,
  kLocalBases = 7,
  kTest = 99,
};

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, StreamPurpose purpose);

  double uniform();  ///< [0, 1)
  double normal();
  Complex complex_normal();  ///< real and imaginary parts N(0, 1/2)

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

Matrix random_gaussian_matrix(RandomStream& rng, std::size_t rows, std::size_t cols);

/// Q from the QR factorization of a complex Gaussian matrix, with phases fixed
/// so that R has a positive real diagonal.
Matrix random_unitary(RandomStream& rng, std::size_t n);

/// The two-atom example: weights (1, 1), blocks [1 0] and [0 1].
GFrameFamily example_2_3();

/// Orthonormal basis with blocks Q_j / sqrt(mu_j). Requires sum(dims) == n.
GFrameFamily random_onb(std::uint64_t seed, std::size_t n, const std::vector<std::size_t>& dims,
                        const std::vector<double>& weights);

/// Frame with bounds exactly (A, B). D == n routes through Theta o V; D > n draws a
/// D x n matrix with pinned singular values and partitions its rows.
GFrameFamily random_frame_with_bounds(std::uint64_t seed, std::size_t n, const std::vector<std::size_t>& dims,
                                      const std::vector<double>& weights, double lower, double upper);

/// Random family right-multiplied by a rank-(n-1) projector.
GFrameFamily incomplete_family(std::uint64_t seed, std::size_t n, const std::vector<std::size_t>& dims,
                               const std::vector<double>& weights);

LocalBases random_local_bases(std::uint64_t seed, const LocalDims& dims);

enum class TargetClass { kOrthonormalBasis, kParseval, kTight, kFrame, kRiesz, kIncomplete };

std::string_view target_class_name(TargetClass c);
/// Accepts onb/orthonormal_basis, parseval, tight, frame, riesz, incomplete.
TargetClass parse_target_class(std::string_view name);

struct GeneratorSpec {
  std::uint64_t seed = 0;
  std::size_t ambient_dim = 2;
  std::vector<std::size_t> dims;
  std::vector<double> weights;
  TargetClass target = TargetClass::kFrame;
  double lower = 1.0;  ///< A; tight uses it as the common bound
  double upper = 1.0;  ///< B

  /// Throws LayoutMismatch / InvalidBounds when class and layout are incompatible.
  void validate() const;
};

GFrameFamily generate(const GeneratorSpec& spec);

}  // namespace gframe
