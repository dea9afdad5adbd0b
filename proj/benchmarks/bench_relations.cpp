#include <benchmark/benchmark.h>

#include "dahalab/daha.hpp"

using namespace dahalab;

static void BM_RelationSuite(benchmark::State& state) {
  const auto flavor = state.range(0) == 0 ? Flavor::GL : Flavor::SL;
  const int N = static_cast<int>(state.range(1)), k = static_cast<int>(state.range(2));
  const RectangularModule m(flavor, N, k);
  const auto sample = enumerate_ball(flavor, N, k, 1);
  const auto table = relation_table(flavor, m.params());
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(m, table, sample));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(table.size() * sample.size()));
}
BENCHMARK(BM_RelationSuite)->Args({0, 2, 2})->Args({1, 2, 2})->Args({1, 3, 1})->Unit(benchmark::kMillisecond);

static void BM_ApplyT(benchmark::State& state) {
  const RectangularModule m(Flavor::GL, 3, 2);
  const auto walks = enumerate_ball(Flavor::GL, 3, 2, 1);
  for (auto _ : state)
    for (const auto& u : walks) benchmark::DoNotOptimize(m.apply(Gen{GenKind::T, 2}, WalkVector::basis(u)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(walks.size()));
}
BENCHMARK(BM_ApplyT);
