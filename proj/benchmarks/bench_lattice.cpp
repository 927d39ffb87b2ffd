#include <benchmark/benchmark.h>

#include <random>

#include "dieudonne/lattice.hpp"

using namespace dieudonne;

static void BM_ColumnHermite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ring r = RingContext::make(3, 2, 20);
  std::mt19937_64 rng(1);
  Matrix g = Matrix::random(r, n, 2 * n, rng);
  for (int c = 0; c < 2 * n; ++c) g.scale_col(c, r->p_power(c % 3));
  for (auto _ : state) benchmark::DoNotOptimize(column_hnf(g));
}
BENCHMARK(BM_ColumnHermite)->Arg(4)->Arg(8)->Arg(14);

static void BM_LatticeSumIntersect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ring r = RingContext::make(5, 2, 20);
  std::mt19937_64 rng(2);
  auto draw = [&] {
    Matrix g = Matrix::random(r, n, n, rng);
    for (int c = 0; c < n; ++c) g.scale_col(c, r->p_power(c % 4));
    return Lattice::from_generators(g, 2);
  };
  const Lattice a = draw();
  const Lattice b = draw();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum(a, b));
    benchmark::DoNotOptimize(intersect(a, b));
  }
}
BENCHMARK(BM_LatticeSumIntersect)->Arg(4)->Arg(8)->Arg(14);
