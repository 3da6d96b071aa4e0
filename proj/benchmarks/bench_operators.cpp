#include <benchmark/benchmark.h>

#include "tautring/expr.hpp"
#include "tautring/operators.hpp"

using namespace tautring;

static void BM_ApplyD_Monomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RingContext ctx{8, 2 * n, 8};
  const TautPoly f = pow(TautPoly(Generator::p(2)), n) * TautPoly(Generator::q(1)) * TautPoly(Generator::p(n));
  for (auto _ : state) benchmark::DoNotOptimize(apply_D(ctx, f));
}
BENCHMARK(BM_ApplyD_Monomial)->DenseRange(2, 8, 2);

static void BM_ApplyD_Dense(benchmark::State& state) {
  const RingContext ctx = RingContext::for_genus(6);
  const TautPoly base = parse_expr("p1 + p2 + p3 + q1 + q2");
  const TautPoly f = pow(base, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_D(ctx, f));
  state.counters["terms"] = static_cast<double>(f.size());
}
BENCHMARK(BM_ApplyD_Dense)->DenseRange(2, 6, 2);

static void BM_SeriesExp(benchmark::State& state) {
  const TautPoly f = parse_expr("2*q1 + p1*q1 + q2");
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(f, {static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_SeriesExp)->DenseRange(4, 12, 4);
