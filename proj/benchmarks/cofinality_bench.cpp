#include <benchmark/benchmark.h>

#include "tcat/cofinality.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/shapes.hpp"

using namespace tcat;

namespace {

void BM_DiamondToSharp(benchmark::State& state) {
  MarkedFunctor f = fixtures::diamond_to_sharp();
  for (auto _ : state) benchmark::DoNotOptimize(check_decat_cofinality(f));
}
BENCHMARK(BM_DiamondToSharp);

void BM_IdentityOseg(benchmark::State& state) {
  MarkedTwoCategory c = maximal_marking(oseg(static_cast<int>(state.range(0))).category);
  MarkedFunctor f{"id", c, c, identity_two_functor(c.category)};
  for (auto _ : state) benchmark::DoNotOptimize(check_decat_cofinality(f));
}
BENCHMARK(BM_IdentityOseg)->DenseRange(1, 3);

void BM_AdaggerHypotheses(benchmark::State& state) {
  MarkedTwoCategory c = minimal_marking(oseg(static_cast<int>(state.range(0))).category);
  MarkedFunctor f{"id", c, c, identity_two_functor(c.category)};
  for (auto _ : state) benchmark::DoNotOptimize(check_adagger_hypotheses(f));
}
BENCHMARK(BM_AdaggerHypotheses)->DenseRange(1, 3);

void BM_QuillenAIdentity(benchmark::State& state) {
  FiniteCategory c = underlying_category(interval(static_cast<int>(state.range(0))));
  TwoFunctor id = identity_two_functor(locally_discrete(c));
  Functor f{id.objects, id.one_cells};
  for (auto _ : state) benchmark::DoNotOptimize(check_quillen_a(f, c, c));
}
BENCHMARK(BM_QuillenAIdentity)->DenseRange(1, 6);

}  // namespace

BENCHMARK_MAIN();
