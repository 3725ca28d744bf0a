#include <benchmark/benchmark.h>

#include <vector>

#include "starmap/bijection.hpp"
#include "support/generators.hpp"

namespace {

using namespace starmap;

std::vector<BlackPartitionedMap> sample_maps(int n, int count) {
  gen::Engine rng(static_cast<std::uint64_t>(n) * 7919);
  std::vector<BlackPartitionedMap> maps;
  for (int i = 0; i < count; ++i) maps.push_back(gen::star_map(rng, n));
  return maps;
}

void BM_Psi(benchmark::State& state) {
  const auto maps = sample_maps(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(psi(maps[i++ % maps.size()]));
}
BENCHMARK(BM_Psi)->RangeMultiplier(2)->Range(4, 64);

void BM_PsiInverse(benchmark::State& state) {
  std::vector<PermutedThornTree> trees;
  for (const auto& m : sample_maps(static_cast<int>(state.range(0)), 64)) trees.push_back(psi(m));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(psi_inverse(trees[i++ % trees.size()]));
}
BENCHMARK(BM_PsiInverse)->RangeMultiplier(2)->Range(4, 64);

void BM_Classify(benchmark::State& state) {
  gen::Engine rng(99);
  std::vector<PermutedThornTree> trees;
  for (int k = 0; k < 64; ++k) trees.push_back(gen::permuted_tree(rng, gen::partition(rng, static_cast<int>(state.range(0)))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(trees[i++ % trees.size()]));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(4, 64);

// Every permuted thorn tree of one type.
void BM_TreeSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long images = 0;
    for_each_permuted_tree(Partition{n}, [&](const PermutedThornTree& t) { images += is_image(classify(t)) ? 1 : 0; });
    benchmark::DoNotOptimize(images);
  }
}
BENCHMARK(BM_TreeSweep)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
