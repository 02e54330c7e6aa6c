// Time to produce z(0..N, lambda) by each method.

#include <benchmark/benchmark.h>

#include "trinomial/methods.hpp"
#include "trinomial/series.hpp"

namespace {

using trinomial::Method;

void BM_Diagonal(benchmark::State& state, Method method, int lambda) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto seq = trinomial::compute_diagonal(method, lambda, max_n);
    benchmark::DoNotOptimize(seq.values.data());
  }
  state.SetItemsProcessed(state.iterations() * (max_n + 1));
}

void BM_SeriesSqrt(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto r = trinomial::radicand(order);
  for (auto _ : state) benchmark::DoNotOptimize(trinomial::series_sqrt(r));
}

#define TRINOMIAL_METHOD_BENCH(m)                                               \
  BENCHMARK_CAPTURE(BM_Diagonal, m##_central, Method::m, 0)->RangeMultiplier(4)->Range(16, 256); \
  BENCHMARK_CAPTURE(BM_Diagonal, m##_lambda4, Method::m, 4)->RangeMultiplier(4)->Range(16, 256)

TRINOMIAL_METHOD_BENCH(oracle);
TRINOMIAL_METHOD_BENCH(sum1);
TRINOMIAL_METHOD_BENCH(sum2);
TRINOMIAL_METHOD_BENCH(sum3);
TRINOMIAL_METHOD_BENCH(ratio);
TRINOMIAL_METHOD_BENCH(recurrence);
TRINOMIAL_METHOD_BENCH(delta);
TRINOMIAL_METHOD_BENCH(series);
TRINOMIAL_METHOD_BENCH(stepwise);

BENCHMARK(BM_SeriesSqrt)->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
