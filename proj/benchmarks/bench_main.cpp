#include <benchmark/benchmark.h>

#include "lspace/bialgebra.hpp"
#include "lspace/homomap.hpp"
#include "lspace/matrixops.hpp"
#include "lspace/random.hpp"
#include "lspace/ribbon.hpp"

using namespace lspace;

static void BM_LspaceOf(benchmark::State& state) {
  Rng rng(7);
  const RibbonGraph g = random_ribbon_graph(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lspace_of(g));
}
BENCHMARK(BM_LspaceOf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_EnumerateLagrangians(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_lagrangian(n, [&](const Lagrangian&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateLagrangians)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
  const auto all = enumerate_lagrangians(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(all[i]));
    i = (i + 1) % all.size();
  }
}
BENCHMARK(BM_Canonicalize)->DenseRange(2, 5);

static void BM_InterlacePolynomial(benchmark::State& state) {
  Rng rng(11);
  const int n = static_cast<int>(state.range(0));
  FramedGraphMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.set(i, j, rng.coin());
  }
  for (auto _ : state) benchmark::DoNotOptimize(interlace_polynomial(m));
}
BENCHMARK(BM_InterlacePolynomial)->Arg(8)->Arg(12)->Arg(16);

static void BM_GradeReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grade_report(n, 1));
}
BENCHMARK(BM_GradeReport)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
