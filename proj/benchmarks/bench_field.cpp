#include <benchmark/benchmark.h>

#include <random>

#include "wexlat/field.hpp"

using namespace wexlat;

namespace {

Matrix random_matrix(Scalar p, std::size_t rows, std::size_t cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Scalar> dist(0, p - 1);
  Matrix m(PrimeField(p), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

void BM_rref(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(5, n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(64)->Arg(128);

void BM_kernel_basis(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(3, n / 2, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel_basis)->Arg(32)->Arg(128);

void BM_subspace_intersection(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix a = row_space(random_matrix(2, n / 2, n, 1));
  Matrix b = row_space(random_matrix(2, n / 2, n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(subspace_intersection(a, b));
}
BENCHMARK(BM_subspace_intersection)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
