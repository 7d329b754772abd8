#include <benchmark/benchmark.h>

#include "wexlat/report.hpp"

using namespace wexlat;

namespace {

Category linear(int n, Scalar p = 2) {
  return type_a(n, std::string(static_cast<std::size_t>(n - 1), 'R'), p);
}

void BM_build_bimodule(benchmark::State& state) {
  Category cat = linear(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_ext_bimodule(build_algebra(cat.indecs)));
}
BENCHMARK(BM_build_bimodule)->Arg(3)->Arg(4)->Arg(5);

void BM_enumerate(benchmark::State& state) {
  Category cat = linear(static_cast<int>(state.range(0)));
  auto bm = build_ext_bimodule(build_algebra(cat.indecs));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(bm));
}
BENCHMARK(BM_enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate)->Arg(5)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_enumerate_general_path(benchmark::State& state) {
  // Same lattice as the fast path, through the closure-BFS enumerator.
  Category cat = linear(static_cast<int>(state.range(0)));
  auto bm = build_ext_bimodule(build_algebra(cat.indecs));
  EnumOptions opts;
  opts.force_general = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(bm, opts));
}
BENCHMARK(BM_enumerate_general_path)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_full_report(benchmark::State& state) {
  Category cat = linear(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Pipeline p = run_pipeline(cat);
    benchmark::DoNotOptimize(report_json(p));
  }
}
BENCHMARK(BM_full_report)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_middle_exact_sweep(benchmark::State& state) {
  Category cat = linear(static_cast<int>(state.range(0)));
  auto bm = build_ext_bimodule(build_algebra(cat.indecs));
  SubmoduleLattice lat = enumerate_submodules(bm);
  for (auto _ : state) {
    MiddleExactChecker checker(bm);
    std::size_t exact = 0;
    for (const auto& node : lat.nodes()) exact += checker.check(node.basis);
    benchmark::DoNotOptimize(exact);
  }
}
BENCHMARK(BM_middle_exact_sweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
