#pragma once

#include <functional>
#include <string>
#include <vector>

#include "starmap/partition.hpp"
#include "starmap/permutation.hpp"

namespace starmap {

/// Set partition of {1..n}. Blocks are sorted internally and ordered by their
/// minimum element.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition() = default;
  /// Validates disjointness and coverage of {1..n}.
  SetPartition(int n, std::vector<Block> blocks);

  static SetPartition singletons(int n);
  static SetPartition single_block(int n);
  /// The orbit partition of a permutation.
  static SetPartition orbits_of(const Permutation& p);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
  /// Index of the block containing the 1-based element k.
  int block_of(int k) const { return block_of_[static_cast<std::size_t>(k - 1)]; }
  /// Sorted block sizes.
  Partition type() const;

  /// True when every block of `finer` lies inside a block of this partition.
  bool is_coarser_than(const SetPartition& finer) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks_ == b.blocks_; }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.blocks_ <=> b.blocks_; }

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

/// Every set partition of {1..|lambda|} whose sorted block sizes equal lambda,
/// each exactly once.
void for_each_set_partition_of_type(const Partition& lambda,
                                    const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> set_partitions_of_type(const Partition& lambda);

/// Every permutation whose cycles each lie inside a block of pi.
void for_each_permutation_in(const SetPartition& pi,
                             const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> permutations_in(const SetPartition& pi);

}  // namespace starmap
