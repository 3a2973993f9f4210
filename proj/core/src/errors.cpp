#include "gframe/errors.hpp"

#include <cmath>

namespace gframe {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kNonPositiveWeight: return "NonPositiveWeight";
    case Errc::kEmptyMeasure: return "EmptyMeasure";
    case Errc::kInvalidDimension: return "InvalidDimension";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kNonFiniteEntry: return "NonFiniteEntry";
    case Errc::kInvalidTolerance: return "InvalidTolerance";
    case Errc::kNotAFrame: return "NotAFrame";
    case Errc::kNotOrthonormalBasis: return "NotOrthonormalBasis";
    case Errc::kNotRieszBasis: return "NotRieszBasis";
    case Errc::kNotSelfAdjoint: return "NotSelfAdjoint";
    case Errc::kNormExceedsOne: return "NormExceedsOne";
    case Errc::kNotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case Errc::kDegenerateSpectrumGrid: return "DegenerateSpectrumGrid";
    case Errc::kLayoutMismatch: return "LayoutMismatch";
    case Errc::kInvalidBounds: return "InvalidBounds";
    case Errc::kNotUnitaryBasis: return "NotUnitaryBasis";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& detail, std::optional<std::size_t> index) {
  std::string msg(errc_name(code));
  if (index) msg += "(" + std::to_string(*index) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(Errc code, const std::string& detail, std::optional<std::size_t> index)
    : std::runtime_error(format_message(code, detail, index)), code_(code), index_(index) {}

void require_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(Errc::kInvalidTolerance, "tolerance must be positive and finite, got " + std::to_string(tol));
  }
}

}  // namespace gframe
