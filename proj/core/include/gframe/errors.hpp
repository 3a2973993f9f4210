#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gframe {

enum class Errc {
  kNonPositiveWeight,
  kEmptyMeasure,
  kInvalidDimension,
  kShapeMismatch,
  kNonFiniteEntry,
  kInvalidTolerance,
  kNotAFrame,
  kNotOrthonormalBasis,
  kNotRieszBasis,
  kNotSelfAdjoint,
  kNormExceedsOne,
  kNotPositiveSemidefinite,
  kDegenerateSpectrumGrid,
  kLayoutMismatch,
  kInvalidBounds,
  kNotUnitaryBasis,
};

std::string_view errc_name(Errc code);

/// Every contract violation raised by the library. `index()` carries the
/// offending atom/position when one exists (e.g. NonPositiveWeight(1)).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::optional<std::size_t> index = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

void require_tolerance(double tol);

}  // namespace gframe
