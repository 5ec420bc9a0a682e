#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvlab {

enum class Errc {
  kParse,
  kInvalidArgument,
  kGuardExceeded,
  kNotInMSquared,
  kNotLocal,
  kUnsupportedDimension,
  kZeroDimensional,
  kUnitIdeal,
  kNotArtinian,
  kBudgetExceeded,
  kMismatch,
  kZeroEntry,
  kNotRegular,
  kUnknownPreset,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace curvlab
