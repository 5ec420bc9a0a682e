#include <random>

#include "curvlab/error.hpp"
#include "curvlab/matrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace curvlab;

namespace {

const PrimeField F101(101);

Matrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols, PrimeField f = F101) {
  if (rows.empty()) return Matrix(0, cols, f);
  return Matrix::from_rows(f, rows);
}

}  // namespace

TEST_CASE("field arithmetic stays reduced") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(6, 6) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(12), Error);
}

TEST_CASE("rref of small matrices") {
  auto id = rref(Matrix::identity(2, F101));
  CHECK(id.reduced == Matrix::identity(2, F101));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto z = rref(Matrix(1, 1, F101));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());

  auto r = rref(Matrix::from_rows(F101, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == Matrix::from_rows(F101, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(Matrix::identity(2, F101)).empty());

  auto k1 = kernel_basis(Matrix(1, 1, F101));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Vector{1});

  auto k2 = kernel_basis(Matrix::from_rows(F101, {{1, 2}, {2, 4}}));
  REQUIRE(k2.size() == 1);
  // proportional to (2, 100)
  CHECK(F101.mul(k2[0][0], 100) == F101.mul(k2[0][1], 2));
  CHECK(k2[0] != Vector{0, 0});
}

TEST_CASE("solve examples") {
  auto s = solve(Matrix::identity(2, F101), Vector{5, 7});
  REQUIRE(s);
  CHECK(*s == Vector{5, 7});
  CHECK_FALSE(solve(Matrix::from_rows(F101, {{1, 2}, {2, 4}}), Vector{1, 3}));
  auto z = solve(Matrix(1, 1, F101), Vector{0});
  REQUIRE(z);
  CHECK(*z == Vector{0});
}

TEST_CASE("random matrices agree with plain elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 101 : 32003);
    const PrimeField f(static_cast<std::uint32_t>(p));
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    const auto raw = oracle::random_matrix(rng, rows, cols, p, static_cast<int>(rng() % 90));
    const Matrix m = to_matrix(raw, cols, f);
    const std::size_t r = oracle::rank(raw, p);
    CHECK(rank(m) == r);

    const auto rr = rref(m);
    CHECK(rr.pivots.size() == r);
    for (std::size_t i = 1; i < rr.pivots.size(); ++i) CHECK(rr.pivots[i - 1] < rr.pivots[i]);

    const auto ker = kernel_basis(m);
    CHECK(ker.size() + r == cols);
    for (const auto& v : ker) {
      const Vector mv = m.apply(v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](Residue x) { return x == 0; }));
    }

    Vector rhs(rows);
    for (auto& x : rhs) x = static_cast<Residue>(rng() % p);
    auto sol = solve(m, rhs);
    auto aug = raw;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(rhs[i]);
    const bool consistent = oracle::rank(aug, p) == r;
    CHECK(sol.has_value() == consistent);
    if (sol) CHECK(m.apply(*sol) == rhs);
  }
}

TEST_CASE("echelon basis grown in batches reaches the full rank") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 2 + rng() % 20, cols = 1 + rng() % 12;
    const auto raw = oracle::random_matrix(rng, rows, cols, 101, 60);
    EchelonBasis eb(cols, F101);
    for (std::size_t start = 0; start < rows; start += 3) {
      std::vector<std::vector<std::int64_t>> part(raw.begin() + start, raw.begin() + std::min(rows, start + 3));
      Matrix batch = to_matrix(part, cols);
      eb.add_rows(batch);
    }
    CHECK(eb.rank() == oracle::rank(raw, 101));
  }
}

TEST_CASE("row space membership and complement") {
  RowSpace s(3, F101);
  CHECK(s.insert(Vector{1, 1, 0}));
  CHECK_FALSE(s.insert(Vector{2, 2, 0}));
  CHECK(s.insert(Vector{0, 1, 1}));
  CHECK(s.contains(Vector{1, 2, 1}));
  CHECK_FALSE(s.contains(Vector{0, 0, 1}));
  CHECK(s.complement().size() == 1);
}
