#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "starmap/partition.hpp"

namespace starmap {

/// A bijection of {1..n}. Images are stored 0-based; every public accessor
/// taking or returning a ground-set element uses 1-based values.
class Permutation {
 public:
  using Cycle = std::vector<int>;

  /// Identity on {1..n}.
  explicit Permutation(int n = 1);

  /// From a 1-based image list: images[k-1] is the image of k.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }
  /// From disjoint cycles over {1..n}; unmentioned elements are fixed.
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of the 1-based element k.
  int operator()(int k) const { return images_[k - 1] + 1; }

  /// 1-based image list.
  std::vector<int> images() const;

  /// Cycles with their maximum element last, ordered by decreasing maximum.
  std::vector<Cycle> cycles() const;
  Partition cycle_type() const;
  int cycle_count() const;
  bool is_long_cycle() const;
  bool is_identity() const;

  /// "(1 2 6 7 4 5 3)" style; cycles start at their minimum and are sorted by
  /// it; fixed points are printed.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation& f, const Permutation& g);
  friend Permutation inverse(const Permutation& f);
  std::vector<int> images_;  // 0-based
};

/// (f*g)(k) = f(g(k)); the right factor acts first.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
/// k -> k+1 for k < n, n -> 1.
Permutation canonical_long_cycle(int n);

/// Visits every permutation of {1..n} in lexicographic order of image lists.
/// The visitor returns void.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit);

}  // namespace starmap

#include <algorithm>
#include <numeric>

namespace starmap {

template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace starmap
