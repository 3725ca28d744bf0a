#include "starmap/set_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "starmap/error.hpp"

namespace starmap {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw InvalidInput("set partition size must be non-negative");
  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidInput("set partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a[0] < b[0]; });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int k : blocks_[i]) {
      if (k < 1 || k > n) throw InvalidInput("set partition element " + std::to_string(k) + " out of range");
      if (block_of_[static_cast<std::size_t>(k - 1)] != -1) {
        throw InvalidInput("set partition element " + std::to_string(k) + " appears twice");
      }
      block_of_[static_cast<std::size_t>(k - 1)] = static_cast<int>(i);
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
    throw InvalidInput("set partition blocks do not cover 1.." + std::to_string(n));
  }
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int k = 1; k <= n; ++k) blocks.push_back({k});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) {
  Block b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 1);
  return SetPartition(n, {std::move(b)});
}

SetPartition SetPartition::orbits_of(const Permutation& p) {
  return SetPartition(p.size(), p.cycles());
}

Partition SetPartition::type() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Partition(std::move(sizes));
}

bool SetPartition::is_coarser_than(const SetPartition& finer) const {
  if (finer.n_ != n_) return false;
  for (const auto& b : finer.blocks_) {
    const int target = block_of(b[0]);
    for (int k : b) {
      if (block_of(k) != target) return false;
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    os << (i ? "," : "") << '{';
    for (std::size_t t = 0; t < blocks_[i].size(); ++t) os << (t ? "," : "") << blocks_[i][t];
    os << '}';
  }
  os << '}';
  return os.str();
}

namespace {

struct TypedGenerator {
  int n;
  std::map<int, int> remaining;  // block size -> how many blocks of it are still to place
  std::vector<char> used;
  std::vector<SetPartition::Block> blocks;
  const std::function<void(const SetPartition&)>& visit;

  void run() {
    int first = 0;
    while (first < n && used[static_cast<std::size_t>(first)]) ++first;
    if (first == n) {
      visit(SetPartition(n, blocks));
      return;
    }
    // The smallest free element opens a block; try each distinct remaining size.
    for (auto& [size, count] : remaining) {
      if (count == 0) continue;
      --count;
      used[static_cast<std::size_t>(first)] = 1;
      blocks.push_back({first + 1});
      choose(first + 1, size - 1);
      blocks.pop_back();
      used[static_cast<std::size_t>(first)] = 0;
      ++count;
    }
  }

  void choose(int from, int needed) {
    if (needed == 0) {
      run();
      return;
    }
    for (int k = from; k < n; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      used[static_cast<std::size_t>(k)] = 1;
      blocks.back().push_back(k + 1);
      choose(k + 1, needed - 1);
      blocks.back().pop_back();
      used[static_cast<std::size_t>(k)] = 0;
    }
  }
};

}  // namespace

void for_each_set_partition_of_type(const Partition& lambda,
                                    const std::function<void(const SetPartition&)>& visit) {
  TypedGenerator gen{lambda.size(), {}, std::vector<char>(static_cast<std::size_t>(lambda.size()), 0), {}, visit};
  for (int part : lambda.parts()) ++gen.remaining[part];
  gen.run();
}

std::vector<SetPartition> set_partitions_of_type(const Partition& lambda) {
  std::vector<SetPartition> out;
  for_each_set_partition_of_type(lambda, [&](const SetPartition& pi) { out.push_back(pi); });
  return out;
}

void for_each_permutation_in(const SetPartition& pi,
                             const std::function<void(const Permutation&)>& visit) {
  const int n = pi.size();
  if (n == 0) return;
  // Odometer over per-block arrangements; block b maps block[t] -> arrangement[b][t].
  std::vector<std::vector<int>> arrangement(pi.blocks().begin(), pi.blocks().end());
  std::vector<int> images(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t b = 0; b < arrangement.size(); ++b) {
      const auto& block = pi.blocks()[b];
      for (std::size_t t = 0; t < block.size(); ++t) {
        images[static_cast<std::size_t>(block[t] - 1)] = arrangement[b][t];
      }
    }
    visit(Permutation::from_images(images));
    std::size_t b = 0;
    for (; b < arrangement.size(); ++b) {
      if (std::next_permutation(arrangement[b].begin(), arrangement[b].end())) break;
    }
    if (b == arrangement.size()) return;
  }
}

std::vector<Permutation> permutations_in(const SetPartition& pi) {
  std::vector<Permutation> out;
  for_each_permutation_in(pi, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace starmap
