#include <benchmark/benchmark.h>

#include "lipteich/annulus.hpp"
#include "lipteich/metrics.hpp"

using namespace lipteich;

static void BM_DlaBruteforce(benchmark::State& state) {
  const AnnulusPoint a(0.0, 1e-3), b(250.0, 4e-3);
  const auto cutoff = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dla_bruteforce(a, b, cutoff));
  state.SetComplexityN(cutoff);
}
BENCHMARK(BM_DlaBruteforce)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity(benchmark::oN);

static void BM_DlaScan(benchmark::State& state) {
  const double l = 1.0 / static_cast<double>(state.range(0));
  const AnnulusPoint a(0.0, l), b(1e6, 2.0 * l);
  for (auto _ : state) benchmark::DoNotOptimize(dla_scan(a, b));
}
BENCHMARK(BM_DlaScan)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_LipschitzSup(benchmark::State& state) {
  const FNPoint s = FNPoint::torus(0.9, 0.2), t = FNPoint::torus(1.4, -0.6);
  const auto cands = enumerate_slopes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lipschitz_sup(s, t, cands));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cands.size()));
}
BENCHMARK(BM_LipschitzSup)->Arg(8)->Arg(32)->Arg(64);

static void BM_DlAdaptive(benchmark::State& state) {
  const FNPoint s = FNPoint::torus(0.01, 0.0), t = FNPoint::torus(0.02, 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(dl_adaptive(s, t));
}
BENCHMARK(BM_DlAdaptive)->Unit(benchmark::kMillisecond);

static void BM_FlatTorusDt(benchmark::State& state) {
  const FlatTorus a({0.0, 1.0}), b({0.3, 1.7});
  for (auto _ : state) benchmark::DoNotOptimize(flat_torus_dt(a, b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FlatTorusDt)->Arg(50)->Arg(200);
