#include <benchmark/benchmark.h>

#include "dieudonne/chain_analysis.hpp"
#include "dieudonne/gallery.hpp"
#include "dieudonne/slopes.hpp"

using namespace dieudonne;

static void BM_MinimalHeight(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const UnitaryModule m = build_odd(a, a + 1, gallery_ring(3));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_and_height(m));
}
BENCHMARK(BM_MinimalHeight)->DenseRange(1, 3);

static void BM_SlopeSamples(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const UnitaryModule d = build_deformed(a, a + 1, 1, gallery_ring(3));
  for (auto _ : state) benchmark::DoNotOptimize(slope_samples(d));
}
BENCHMARK(BM_SlopeSamples)->DenseRange(2, 3);
