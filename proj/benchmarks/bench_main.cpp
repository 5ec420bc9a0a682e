#include <random>

#include <benchmark/benchmark.h>

#include "curvlab/homology.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/module.hpp"

using namespace curvlab;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<std::int64_t>> data(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : data)
    for (auto& x : row)
      if (coin(rng) < density) x = static_cast<std::int64_t>(rng() % f.modulus());
  return Matrix::from_rows(f, data);
}

AlgebraPtr r3() { return build_algebra(101, {"a", "b", "c"}, {"a^2", "b*c", "c^2", "b^2 - a*c"}); }

void BM_Rref(benchmark::State& state) {
  PrimeField f(32003);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(f, n, n, 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_ResolveResidueR3(benchmark::State& state) {
  auto a = r3();
  auto k = residue_field(a);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(resolve(k, depth).betti.back());
}
BENCHMARK(BM_ResolveResidueR3)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_TorR3(benchmark::State& state) {
  auto a = r3();
  auto m = cyclic_module(a, std::vector<std::string>{"b", "c"});
  auto n = cyclic_module(a, std::vector<std::string>{"a"});
  for (auto _ : state) benchmark::DoNotOptimize(tor_lengths(m, n, 8).lengths.back());
}
BENCHMARK(BM_TorR3)->Unit(benchmark::kMillisecond);

void BM_Groebner(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_algebra(101, {"x", "y", "z"}, {"x^3 - y*z", "y^3", "z^3 - x*y"}));
}
BENCHMARK(BM_Groebner)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
