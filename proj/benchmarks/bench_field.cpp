#include <benchmark/benchmark.h>

#include "dahalab/field_element.hpp"

using namespace dahalab;

namespace {

// (t - t^{-1}) / (1 - t^{2d}) with t = v^2, the shape of the seminormal coefficients.
FieldElement coefficient(int d) {
  const FieldElement t = FieldElement::monomial(2);
  return (t - t.inverse()) / (FieldElement(1) - t.pow(2 * d));
}

}  // namespace

static void BM_MonomialProduct(benchmark::State& state) {
  const FieldElement a = FieldElement::monomial(3, 2), b = FieldElement::monomial(-5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MonomialProduct);

static void BM_RationalSum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FieldElement a = coefficient(d), b = coefficient(d + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalSum)->Arg(1)->Arg(4)->Arg(8);

static void BM_RationalProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FieldElement a = coefficient(d), b = coefficient(-d);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RationalProduct)->Arg(1)->Arg(4)->Arg(8);
