#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "curvlab/resolution.hpp"

// boost::rational (1.74) compares against integers through a reversible
// template; C++20 rewritten candidates turn `r == 1` into unbounded recursion.
// Exact-match overloads take precedence over both.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace curvlab {

using Rational = boost::rational<std::int64_t>;

enum class GrowthClass { kFinitePd, kPeriodic, kPolynomial, kExponential };
std::string growth_name(GrowthClass g);

enum class EstimateMethod { kRatioWindow, kRootWindow };

/// Finite-window estimate of a curvature.
struct CurvatureInterval {
  Rational lo{0};
  Rational hi{0};
  EstimateMethod method = EstimateMethod::kRatioWindow;
  /// Ratios c_{n+1}/c_n are taken for n in [first, last].
  std::size_t first = 0;
  std::size_t last = 0;
  GrowthClass growth = GrowthClass::kFinitePd;
};

/// (min, max) of c_{n+1}/c_n over the last `window` ratios of seq.
/// Throws Errc::kZeroEntry when one of the denominators is zero.
std::pair<Rational, Rational> ratio_window(const std::vector<std::size_t>& seq, std::size_t window);
/// (min, max) of c_n^{1/n} over the last `window` indices (n >= 1).
std::pair<double, double> root_window(const std::vector<std::size_t>& seq, std::size_t window);

/// Interval from the ratio window over the tail of the Betti sequence.
/// Requires seq.size() >= window + 2 (InvalidArgument otherwise).
CurvatureInterval curvature_estimate(const std::vector<std::size_t>& seq, std::size_t window);
CurvatureInterval curvature_estimate(const FreeResolution& res, std::size_t window);

/// Ratios bound the terminal value both ways:
/// c_1 * (min ratio)^{N-1} <= c_N <= c_1 * (max ratio)^{N-1}, ratios over n in [1, N-1].
bool ratio_root_consistent(const std::vector<std::size_t>& seq);

double to_double(const Rational& r);
/// "p/q", or "p" for integers.
std::string to_string(const Rational& r);

}  // namespace curvlab
