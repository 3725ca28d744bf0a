#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "starmap/arith.hpp"

namespace starmap {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; they are sorted. Throws InvalidInput on parts < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// From exponential notation pairs (part, multiplicity).
  static Partition from_exponents(std::initializer_list<std::pair<int, int>> powers);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// m_i: number of parts equal to i.
  int multiplicity(int part) const;
  bool has_part(int part) const { return multiplicity(part) > 0; }
  /// Distinct part values, decreasing.
  std::vector<int> distinct_parts() const;

  /// "1^2 3^1 4^2" (increasing parts, every exponent written); "0" when empty.
  std::string exponential() const;
  /// "(4,2,1)".
  std::string to_string() const;

  /// Lexicographic on the decreasing part lists.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// One part `part` replaced by part+1 (size +1, same length).
Partition partition_up(const Partition& lambda, int part);
/// One part `part` (>= 2) replaced by part-1 (size -1, same length).
Partition partition_down(const Partition& mu, int part);
/// mu with parts j and k removed and a part j+k-1 added.
Partition partition_merge(const Partition& mu, int j, int k);
/// mu with one copy of `part` removed.
Partition partition_remove(const Partition& mu, int part);

/// z = prod_i i^{m_i} m_i!
BigInt z_of(const Partition& lambda);
/// Aut = prod_i m_i!
BigInt aut_of(const Partition& lambda);

/// All partitions of n in decreasing lexicographic order. With `parity`,
/// keeps only those whose length is congruent to it mod 2.
std::vector<Partition> partitions_of(int n, std::optional<int> parity = std::nullopt);

/// Distinct rearrangements of the parts; each is a sequence of degrees.
std::vector<std::vector<int>> distinct_arrangements(const Partition& lambda);

}  // namespace starmap
