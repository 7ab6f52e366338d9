#include <benchmark/benchmark.h>

#include "lipteich/holonomy.hpp"
#include "lipteich/hypkernel.hpp"

using namespace lipteich;

static void BM_CurveLength(benchmark::State& state) {
  const FNPoint p = FNPoint::torus(0.3, 1.7);
  const auto q = state.range(0);
  const CurveClass c(2 * q + 1, q);
  for (auto _ : state) benchmark::DoNotOptimize(curve_length(p, c));
  state.SetComplexityN(q);
}
BENCHMARK(BM_CurveLength)->RangeMultiplier(4)->Range(1, 1 << 12)->Complexity(benchmark::oN);

static void BM_CurveLengthThin(benchmark::State& state) {
  // Tiny length, huge twist: the log-space path.
  const FNPoint p = FNPoint::torus(1e-6, 3.0e4);
  const CurveClass c(12345, 7);
  for (auto _ : state) benchmark::DoNotOptimize(curve_length(p, c));
}
BENCHMARK(BM_CurveLengthThin);

static void BM_ShortMarking(benchmark::State& state) {
  const FNPoint p = FNPoint::torus(0.8, 0.3);
  const auto cands = enumerate_slopes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(short_marking(p, cands));
}
BENCHMARK(BM_ShortMarking)->Arg(4)->Arg(16)->Arg(32);

static void BM_Hexagon(benchmark::State& state) {
  double w = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hexagon_opposite(0.7, 1.1, w));
    w += 1e-9;
  }
}
BENCHMARK(BM_Hexagon);

static void BM_Fermi(benchmark::State& state) {
  double du = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermi_distance(2.0, -1.5, du));
    du += 1e-9;
  }
}
BENCHMARK(BM_Fermi);
