#include <random>

#include "curvlab/asymptotics.hpp"
#include "curvlab/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace curvlab;

TEST_CASE("ratio and root windows") {
  auto [lo, hi] = ratio_window({1, 1, 1, 1, 1}, 3);
  CHECK(lo == 1);
  CHECK(hi == 1);
  std::tie(lo, hi) = ratio_window({1, 2, 4, 8, 16}, 3);
  CHECK(lo == 2);
  CHECK(hi == 2);
  CHECK_THROWS_AS(ratio_window({1, 2, 0, 1, 1}, 3), Error);

  auto r = root_window({1, 1, 1, 1, 1}, 3);
  CHECK(r.first == doctest::Approx(1.0));
  CHECK(r.second == doctest::Approx(1.0));
  std::vector<std::size_t> pow2{1};
  while (pow2.size() < 11) pow2.push_back(pow2.back() * 2);
  r = root_window(pow2, 3);
  CHECK(r.first == doctest::Approx(2.0));
  std::vector<std::size_t> scaled;
  for (auto v : pow2) scaled.push_back(3 * v);
  r = root_window(scaled, 3);
  CHECK(r.first > 2.0);
  CHECK(r.second < 2.3);
}

TEST_CASE("curvature estimates") {
  auto c1 = curvature_estimate(resolve(residue_field(fx::r1()), 12), 4);
  CHECK(c1.growth == GrowthClass::kPeriodic);
  CHECK(c1.lo == 1);
  CHECK(c1.hi == 1);
  auto c2 = curvature_estimate(resolve(residue_field(fx::r2()), 10), 4);
  CHECK(c2.growth == GrowthClass::kExponential);
  CHECK(c2.lo == 2);
  CHECK(c2.hi == 2);
  auto ca = curvature_estimate(resolve(fx::cyclic(fx::r3(), {"a"}), 12), 4);
  CHECK(ca.growth == GrowthClass::kPeriodic);
  CHECK(ca.lo == 1);
  auto f = curvature_estimate(std::vector<std::size_t>{2, 1, 0, 0, 0, 0, 0}, 4);
  CHECK(f.growth == GrowthClass::kFinitePd);
  CHECK(f.lo == 0);
  CHECK(f.hi == 0);
  auto poly = curvature_estimate(std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9}, 4);
  CHECK(poly.growth == GrowthClass::kPolynomial);
  CHECK(poly.lo <= poly.hi);
  CHECK_THROWS_AS(curvature_estimate(std::vector<std::size_t>{1, 2, 3}, 4), Error);
}

TEST_CASE("ratio bounds on terminal values hold on random positive sequences") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::size_t> s;
    const std::size_t n = 3 + rng() % 12;
    for (std::size_t i = 0; i < n; ++i) s.push_back(1 + rng() % 50);
    CHECK(ratio_root_consistent(s));
    // scaling does not move the ratio window
    std::vector<std::size_t> scaled;
    for (auto v : s) scaled.push_back(v * 7);
    CHECK(ratio_window(s, 2) == ratio_window(scaled, 2));
  }
  CHECK(ratio_root_consistent(resolve(residue_field(fx::r3()), 10).betti));
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(2047, 1023)) == "2047/1023");
  CHECK(to_double(Rational(1, 4)) == 0.25);
}
