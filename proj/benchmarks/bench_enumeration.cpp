#include <benchmark/benchmark.h>

#include "dahalab/periodic.hpp"
#include "dahalab/tableaux.hpp"

using namespace dahalab;

static void BM_EnumerateBall(benchmark::State& state) {
  const auto flavor = state.range(0) == 0 ? Flavor::GL : Flavor::SL;
  const int radius = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(flavor, 3, 2, radius));
}
BENCHMARK(BM_EnumerateBall)->Args({0, 2})->Args({0, 3})->Args({1, 3})->Args({1, 5});

static void BM_RectangleSyt(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rect_syt(N, k));
}
BENCHMARK(BM_RectangleSyt)->Args({3, 2})->Args({3, 3})->Args({4, 3});

static void BM_TabPerRoundTrip(benchmark::State& state) {
  const auto walks = enumerate_ball(Flavor::GL, 3, 2, 2);
  for (auto _ : state)
    for (const auto& u : walks) benchmark::DoNotOptimize(per_inverse(per(tab(u))));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(walks.size()));
}
BENCHMARK(BM_TabPerRoundTrip);
