#include <benchmark/benchmark.h>

#include "tcat/cocones.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/shapes.hpp"

using namespace tcat;

namespace {

void BM_AdjunctionColimit(benchmark::State& state) {
  CatValuedFunctor t = fixtures::adjunction_T();
  for (auto _ : state) benchmark::DoNotOptimize(marked_colimit(t));
}
BENCHMARK(BM_AdjunctionColimit);

void BM_ConstantColimitInterval(benchmark::State& state) {
  MarkedTwoCategory c = maximal_marking(interval(static_cast<int>(state.range(0))));
  CatValuedFunctor t = constant_functor(c, fixtures::category("point"));
  for (auto _ : state) benchmark::DoNotOptimize(marked_colimit(t));
}
BENCHMARK(BM_ConstantColimitInterval)->DenseRange(1, 5);

void BM_CheckAdjunctionCocone(benchmark::State& state) {
  CatValuedFunctor t = fixtures::adjunction_T();
  CatCocone k = fixtures::adjunction_cocone();
  for (auto _ : state) benchmark::DoNotOptimize(check_marked_cocone(t, k));
}
BENCHMARK(BM_CheckAdjunctionCocone);

}  // namespace

BENCHMARK_MAIN();
