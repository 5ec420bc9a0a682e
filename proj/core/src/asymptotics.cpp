#include "curvlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

// Growth below this ratio is reported as polynomial rather than exponential.
const Rational kExponentialThreshold(6, 5);

bool has_period(const std::vector<std::size_t>& seq, std::size_t from, std::size_t period) {
  for (std::size_t n = from; n + period < seq.size(); ++n) {
    if (seq[n] != seq[n + period]) return false;
  }
  return true;
}

}  // namespace

std::string growth_name(GrowthClass g) {
  switch (g) {
    case GrowthClass::kFinitePd: return "finite-pd";
    case GrowthClass::kPeriodic: return "periodic";
    case GrowthClass::kPolynomial: return "polynomial";
    case GrowthClass::kExponential: return "exponential";
  }
  return "unknown";
}

std::pair<Rational, Rational> ratio_window(const std::vector<std::size_t>& seq, std::size_t window) {
  if (window == 0 || seq.size() < window + 1) {
    throw Error(Errc::kInvalidArgument, "sequence too short for a ratio window of " + std::to_string(window));
  }
  std::optional<Rational> lo, hi;
  for (std::size_t n = seq.size() - 1 - window; n + 1 < seq.size(); ++n) {
    if (seq[n] == 0) throw Error(Errc::kZeroEntry, "entry " + std::to_string(n) + " of the window is zero");
    const Rational r(static_cast<std::int64_t>(seq[n + 1]), static_cast<std::int64_t>(seq[n]));
    if (!lo || r < *lo) lo = r;
    if (!hi || r > *hi) hi = r;
  }
  return {*lo, *hi};
}

std::pair<double, double> root_window(const std::vector<std::size_t>& seq, std::size_t window) {
  if (window == 0 || seq.size() < window + 1) {
    throw Error(Errc::kInvalidArgument, "sequence too short for a root window of " + std::to_string(window));
  }
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t n = seq.size() - window; n < seq.size(); ++n) {
    if (seq[n] == 0) throw Error(Errc::kZeroEntry, "entry " + std::to_string(n) + " of the window is zero");
    const double r = std::pow(static_cast<double>(seq[n]), 1.0 / static_cast<double>(n));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

CurvatureInterval curvature_estimate(const std::vector<std::size_t>& seq, std::size_t window) {
  if (seq.size() < window + 2 || window == 0) {
    throw Error(Errc::kInvalidArgument, "depth must be at least the window plus two");
  }
  CurvatureInterval out;
  const std::size_t depth = seq.size() - 1;
  out.first = depth - window;
  out.last = depth - 1;
  if (std::find(seq.begin(), seq.end(), std::size_t{0}) != seq.end()) {
    out.growth = GrowthClass::kFinitePd;
    return out;
  }
  // Exact repetition over the window (period at most half of it) means bounded Betti numbers.
  const std::size_t from = depth - window;
  for (std::size_t period = 1; 2 * period <= window; ++period) {
    if (has_period(seq, from, period)) {
      out.lo = out.hi = Rational(1);
      out.growth = GrowthClass::kPeriodic;
      return out;
    }
  }
  std::tie(out.lo, out.hi) = ratio_window(seq, window);
  out.growth = out.lo >= kExponentialThreshold ? GrowthClass::kExponential : GrowthClass::kPolynomial;
  return out;
}

CurvatureInterval curvature_estimate(const FreeResolution& res, std::size_t window) {
  return curvature_estimate(res.betti, window);
}

bool ratio_root_consistent(const std::vector<std::size_t>& seq) {
  using boost::multiprecision::cpp_int;
  if (seq.size() < 3) return true;
  const std::size_t n = seq.size() - 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (seq[i] == 0) return true;  // nothing to compare past a zero
  }
  Rational lo(0), hi(0);
  for (std::size_t i = 1; i < n; ++i) {
    Rational r(static_cast<std::int64_t>(seq[i + 1]), static_cast<std::int64_t>(seq[i]));
    if (i == 1 || r < lo) lo = r;
    if (i == 1 || r > hi) hi = r;
  }
  const unsigned e = static_cast<unsigned>(n - 1);
  const cpp_int c1 = seq[1], cn = seq[n];
  // c1 * (lo.num / lo.den)^e <= cn <= c1 * (hi.num / hi.den)^e
  const bool lower = c1 * boost::multiprecision::pow(cpp_int(lo.numerator()), e) <=
                     cn * boost::multiprecision::pow(cpp_int(lo.denominator()), e);
  const bool upper = cn * boost::multiprecision::pow(cpp_int(hi.denominator()), e) <=
                     c1 * boost::multiprecision::pow(cpp_int(hi.numerator()), e);
  return lower && upper;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace curvlab
