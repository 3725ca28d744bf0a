#include <benchmark/benchmark.h>

#include "starmap/counting.hpp"
#include "starmap/oracle.hpp"

namespace {

using namespace starmap;

void BM_SolveB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_B(n));
}
BENCHMARK(BM_SolveB)->Arg(10)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_VerifyZagier(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_zagier(n));
}
BENCHMARK(BM_VerifyZagier)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_StirlingTriangle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stirling1_triangle(n));
}
BENCHMARK(BM_StirlingTriangle)->Arg(50)->Arg(200);

// Full S_n sweep for the largest long-cycle class.
void BM_EnumerateB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_B(Partition{n}));
}
BENCHMARK(BM_EnumerateB)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateCD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_CD(Partition{n}));
}
BENCHMARK(BM_EnumerateCD)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
