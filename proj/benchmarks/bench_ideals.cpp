#include <benchmark/benchmark.h>

#include "tautring/derivations.hpp"
#include "tautring/expr.hpp"
#include "tautring/ideals.hpp"

using namespace tautring;

static void BM_MembershipIq(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const RingContext ctx = RingContext::for_genus(g);
  const IdealSpec iq = IdealSpec::q_ideal(g);
  TautPoly f = pow(parse_expr("p1 + q1"), static_cast<unsigned>(g)) - pow(TautPoly(Generator::p(1)), static_cast<unsigned>(g));
  for (auto _ : state) benchmark::DoNotOptimize(membership(ctx, f, iq, g));
}
BENCHMARK(BM_MembershipIq)->DenseRange(3, 7, 2);

static void BM_HilbertZeroIdeal(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const RingContext ctx = RingContext::for_genus(g);
  const Presentation pres{ctx, IdealSpec{}, ctx.generators()};
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(pres, g));
}
BENCHMARK(BM_HilbertZeroIdeal)->DenseRange(3, 6, 1);

static void BM_HyperellipticSuite(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperelliptic_suite(g, 2));
}
BENCHMARK(BM_HyperellipticSuite)->DenseRange(3, 8, 1);
