#include <benchmark/benchmark.h>

#include "hlq/hall_littlewood.hpp"
#include "hlq/identities.hpp"
#include "hlq/pochhammer.hpp"
#include "hlq/series.hpp"

using namespace hlq;

static void BM_HlPTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hl_P_table(VarSet::first(n, w), w));
}
BENCHMARK(BM_HlPTable)->Args({2, 6})->Args({3, 6})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_SeriesInverse(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  auto f = MultiSeries::constant(3, 1, cutoff);
  for (int v = 0; v < 3; ++v) f -= MultiSeries::variable(3, v, cutoff).scaled(LaurentQ::q_power(v));
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(f));
}
BENCHMARK(BM_SeriesInverse)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_EulerInverse(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_infinite(1, 1, N).inverse());
}
BENCHMARK(BM_EulerInverse)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_RrA2(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_rr_a2(N));
}
BENCHMARK(BM_RrA2)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_MainTwoAlphabet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_main(2, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MainTwoAlphabet)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
