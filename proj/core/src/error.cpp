#include "curvlab/error.hpp"

namespace curvlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kParse: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kGuardExceeded: return "GuardExceeded";
    case Errc::kNotInMSquared: return "NotInMSquared";
    case Errc::kNotLocal: return "NotLocal";
    case Errc::kUnsupportedDimension: return "UnsupportedDimension";
    case Errc::kZeroDimensional: return "ZeroDimensional";
    case Errc::kUnitIdeal: return "UnitIdeal";
    case Errc::kNotArtinian: return "NotArtinian";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kMismatch: return "MismatchError";
    case Errc::kZeroEntry: return "ZeroEntry";
    case Errc::kNotRegular: return "NotRegular";
    case Errc::kUnknownPreset: return "UnknownPreset";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace curvlab
