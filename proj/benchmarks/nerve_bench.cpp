#include <benchmark/benchmark.h>

#include "tcat/nerve.hpp"
#include "tcat/shapes.hpp"

using namespace tcat;

namespace {

void BM_DuskinSimplicesOseg(benchmark::State& state) {
  TwoCategory c = oseg(static_cast<int>(state.range(0))).category;
  int n = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    count = duskin_simplices(c, n).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["simplices"] = static_cast<double>(count);
}
BENCHMARK(BM_DuskinSimplicesOseg)->ArgsProduct({{1, 2, 3}, {1, 2, 3}});

void BM_NormalLaxFunctorsOseg(benchmark::State& state) {
  TwoCategory c = oseg(static_cast<int>(state.range(0))).category;
  int n = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    count = normal_lax_functors(c, n).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["functors"] = static_cast<double>(count);
}
BENCHMARK(BM_NormalLaxFunctorsOseg)->ArgsProduct({{1, 2, 3}, {1, 2}});

}  // namespace

BENCHMARK_MAIN();
