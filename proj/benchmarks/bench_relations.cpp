#include <benchmark/benchmark.h>

#include "tautring/relations.hpp"

using namespace tautring;

static void BM_GammaCoeff(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Composition a{{1, 2, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(gamma_coeff(d, a));
}
BENCHMARK(BM_GammaCoeff)->DenseRange(4, 12, 4);

static void BM_ZagierSweep(benchmark::State& state) {
  for (auto _ : state) {
    int independent = 0;
    for (int d = 1; d <= 8; ++d) {
      for (int r = 1; r <= 3; ++r) {
        for (int s = 0; s <= 6; ++s) independent += zagier_compare(d, r, s).verdict == ZagierVerdict::Independent;
      }
    }
    benchmark::DoNotOptimize(independent);
  }
}
BENCHMARK(BM_ZagierSweep);

static void BM_Castelnuovo(benchmark::State& state) {
  for (auto _ : state) {
    for (int r = 1; r <= 6; ++r) {
      for (int d = 2 * r - 1; d <= 20; ++d) benchmark::DoNotOptimize(castelnuovo(r, d, 12));
    }
  }
}
BENCHMARK(BM_Castelnuovo);
