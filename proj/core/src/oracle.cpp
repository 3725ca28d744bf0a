#include "starmap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "starmap/error.hpp"
#include "starmap/parallel.hpp"
#include "starmap/permutation.hpp"
#include "starmap/set_partition.hpp"

namespace starmap {
namespace {

void require(const char* what, int n, int limit) {
  if (n > limit) throw BudgetExceeded(what, n, limit);
}

/// Sweeps S_n split by the image of 1; `keep` decides which permutations count.
template <typename Pred>
BigInt count_permutations(int n, Pred keep) {
  const auto partial = detail::map_units(n, [&](int unit) {
    // Permutations with beta(1) = unit + 1, in lexicographic order.
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != unit + 1) rest.push_back(v);
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    images[0] = unit + 1;
    unsigned long count = 0;
    do {
      std::copy(rest.begin(), rest.end(), images.begin() + 1);
      if (keep(Permutation::from_images(images))) ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return count;
  });
  BigInt total = 0;
  for (unsigned long c : partial) total += c;
  return total;
}

bool complement_is_long(const Permutation& beta, const Permutation& long_cycle) {
  return compose(long_cycle, inverse(beta)).is_long_cycle();
}

}  // namespace

BigInt enumerate_A(const Partition& lambda, const Budget& budget) {
  const int n = lambda.size();
  require("enumerate_A", n, budget.permutation_sweep);
  if (n == 0) return 1;
  return count_permutations(n, [&](const Permutation& beta) { return beta.cycle_type() == lambda; });
}

BigInt enumerate_B(const Partition& lambda, const Budget& budget) {
  const int n = lambda.size();
  require("enumerate_B", n, budget.permutation_sweep);
  const Permutation gamma = canonical_long_cycle(n);
  return count_permutations(n, [&](const Permutation& beta) {
    return beta.cycle_type() == lambda && complement_is_long(beta, gamma);
  });
}

BigInt enumerate_Bprime(int n, int m, const Budget& budget) {
  require("enumerate_Bprime", n, budget.permutation_sweep);
  const Permutation gamma = canonical_long_cycle(n);
  return count_permutations(n, [&](const Permutation& beta) {
    return beta.cycle_count() == m && complement_is_long(beta, gamma);
  });
}

BigInt enumerate_stirling1(int n, int k, const Budget& budget) {
  require("enumerate_stirling1", n, budget.permutation_sweep);
  if (n == 0) return k == 0 ? 1 : 0;
  return count_permutations(n, [&](const Permutation& p) { return p.cycle_count() == k; });
}

CDCount enumerate_CD(const Partition& lambda, const Budget& budget) {
  const int n = lambda.size();
  require("enumerate_CD", n, budget.pair_sweep);
  const Permutation gamma = canonical_long_cycle(n);
  const auto partitions = set_partitions_of_type(lambda);
  const auto partial = detail::map_units(static_cast<int>(partitions.size()), [&](int unit) {
    std::pair<unsigned long, unsigned long> cd{0, 0};
    for_each_permutation_in(partitions[static_cast<std::size_t>(unit)], [&](const Permutation& beta) {
      ++cd.first;
      if (complement_is_long(beta, gamma)) ++cd.second;
    });
    return cd;
  });
  CDCount out{0, 0};
  for (auto [c, d] : partial) {
    out.c += c;
    out.d += d;
  }
  return out;
}

BigInt enumerate_ST(const Partition& mu, const Budget& budget) {
  const int n = mu.size();
  require("enumerate_ST", n, budget.permutation_sweep);
  const int p = mu.length();
  // White side: every edge/thorn word of length n with exactly p edges.
  // Black side: every word of p degrees in 1..n-p+1 (root order); keep those whose
  // multiset is mu. Thorn counts on black vertices are then forced.
  unsigned long white_words = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == p) ++white_words;
  }
  unsigned long degree_words = 0;
  const int max_degree = n - p + 1;
  std::vector<int> word(static_cast<std::size_t>(p), 1);
  const std::vector<int> target = [&] {
    auto t = mu.parts();
    std::sort(t.begin(), t.end());
    return t;
  }();
  while (true) {
    auto sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == target) ++degree_words;
    int pos = 0;
    while (pos < p && word[static_cast<std::size_t>(pos)] == max_degree) word[static_cast<std::size_t>(pos++)] = 1;
    if (pos == p) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return BigInt(white_words) * degree_words;
}

ExactRational reformulation_probability(const Partition& lambda, const Budget& budget) {
  const CDCount cd = enumerate_CD(lambda, budget);
  if (cd.c == 0) throw Inconsistency("reformulation_probability: no pairs of type " + lambda.to_string());
  ExactRational q(cd.d, cd.c);
  q.canonicalize();
  return q;
}

bool block_group_size_is_constant(const Partition& lambda, const Budget& budget) {
  require("block_group_size_is_constant", lambda.size(), budget.pair_sweep);
  std::set<unsigned long> sizes;
  for_each_set_partition_of_type(lambda, [&](const SetPartition& pi) {
    unsigned long count = 0;
    for_each_permutation_in(pi, [&](const Permutation&) { ++count; });
    sizes.insert(count);
  });
  return sizes.size() == 1;
}

}  // namespace starmap
