#include <benchmark/benchmark.h>

#include "starmap/symfun.hpp"

namespace {

using namespace starmap;

void BM_ElementaryToMonomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymPoly e = elementary_in_p(n);
  for (auto _ : state) benchmark::DoNotOptimize(p_to_m(e));
}
BENCHMARK(BM_ElementaryToMonomial)->DenseRange(4, 12, 4);

void BM_DeltaMonomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymPoly f = p_to_m(elementary_in_p(n));
  for (auto _ : state) benchmark::DoNotOptimize(delta_monomial(f));
}
BENCHMARK(BM_DeltaMonomial)->DenseRange(4, 10, 3);

// First call per degree builds both transition matrices; later calls hit the cache.
void BM_VerifyReduction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction(n));
}
BENCHMARK(BM_VerifyReduction)->DenseRange(5, 11, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
