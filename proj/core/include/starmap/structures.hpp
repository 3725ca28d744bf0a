#pragma once

#include <functional>
#include <map>
#include <vector>

#include "starmap/oracle.hpp"
#include "starmap/partition.hpp"
#include "starmap/permutation.hpp"
#include "starmap/set_partition.hpp"

namespace starmap {

/// A star map (beta, alpha = (1 2 ... n) beta^{-1}) with a set partition pi of
/// the black side that is coarser than the orbits of beta.
class BlackPartitionedMap {
 public:
  /// Throws InvalidInput naming the offending cycle and blocks when pi splits
  /// a cycle of beta.
  BlackPartitionedMap(Permutation beta, SetPartition pi);

  int size() const { return beta_.size(); }
  const Permutation& beta() const { return beta_; }
  const Permutation& alpha() const { return alpha_; }
  const SetPartition& pi() const { return pi_; }
  /// alpha is a long cycle (the map has a single white vertex).
  bool is_star() const { return alpha_.is_long_cycle(); }
  /// Sorted block sizes of pi.
  Partition type() const { return pi_.type(); }

  friend bool operator==(const BlackPartitionedMap& a, const BlackPartitionedMap& b) {
    return a.beta_ == b.beta_ && a.pi_ == b.pi_;
  }
  friend auto operator<=>(const BlackPartitionedMap& a, const BlackPartitionedMap& b) {
    if (auto c = a.beta_ <=> b.beta_; c != 0) return c;
    return a.pi_ <=> b.pi_;
  }

 private:
  Permutation beta_;
  SetPartition pi_;
  Permutation alpha_;
};

BlackPartitionedMap new_map(const Permutation& beta, const SetPartition& pi);
inline Partition type_of_map(const BlackPartitionedMap& m) { return m.type(); }

/// Visits every black-partitioned map of type lambda (star maps only when
/// `star_only`), ordered by set partition, then by beta.
void for_each_map(const Partition& lambda, bool star_only,
                  const std::function<void(const BlackPartitionedMap&)>& visit,
                  const Budget& budget = {});

enum class SlotKind { Edge, Thorn };

/// An element on the black side: a thorn of `vertex` (counter-clockwise index
/// from the root edge) or, when thorn == kEdge, the vertex's root edge.
struct BlackElement {
  static constexpr int kEdge = -1;
  int vertex = 0;
  int thorn = kEdge;

  bool is_edge() const { return thorn == kEdge; }
  friend auto operator<=>(const BlackElement&, const BlackElement&) = default;
};

/// Ordered star thorn tree. White slots are stored left to right; black vertex
/// b is the endpoint of the b-th edge from the left; black thorns are indexed
/// counter-clockwise starting right after the root edge.
class StarThornTree {
 public:
  StarThornTree(std::vector<SlotKind> white, std::vector<int> black_thorns);

  int size() const { return static_cast<int>(white_.size()); }
  int black_count() const { return static_cast<int>(black_thorns_.size()); }
  /// Number of thorns on either side (n - p).
  int thorn_count() const { return size() - black_count(); }

  const std::vector<SlotKind>& white() const { return white_; }
  const std::vector<int>& black_thorns() const { return black_thorns_; }
  bool is_edge(int slot) const { return white_[static_cast<std::size_t>(slot)] == SlotKind::Edge; }
  /// Black vertex at an edge slot.
  int vertex_at(int slot) const { return slot_index_[static_cast<std::size_t>(slot)]; }
  /// Ordinal of a white thorn slot among white thorns, left to right.
  int white_thorn_ordinal(int slot) const { return slot_index_[static_cast<std::size_t>(slot)]; }
  int edge_slot(int vertex) const { return edge_slot_[static_cast<std::size_t>(vertex)]; }
  int white_thorn_slot(int ordinal) const { return thorn_slot_[static_cast<std::size_t>(ordinal)]; }
  int thorns_of(int vertex) const { return black_thorns_[static_cast<std::size_t>(vertex)]; }
  int degree(int vertex) const { return thorns_of(vertex) + 1; }

  /// Black thorns are numbered by (vertex, counter-clockwise index).
  int black_thorn_ordinal(BlackElement e) const;
  BlackElement black_thorn_at(int ordinal) const;

  /// Reading order around a black vertex, clockwise: the thorns from the last
  /// counter-clockwise one down to the first, then the root edge.
  std::vector<BlackElement> clockwise(int vertex) const;
  /// Counter-clockwise from the root edge: the thorns only.
  std::vector<BlackElement> counter_clockwise(int vertex) const;

  /// Sorted black degrees.
  Partition type() const;

  friend bool operator==(const StarThornTree& a, const StarThornTree& b) {
    return a.white_ == b.white_ && a.black_thorns_ == b.black_thorns_;
  }
  friend auto operator<=>(const StarThornTree& a, const StarThornTree& b) {
    if (auto c = a.white_ <=> b.white_; c != 0) return c;
    return a.black_thorns_ <=> b.black_thorns_;
  }

 private:
  std::vector<SlotKind> white_;
  std::vector<int> black_thorns_;
  std::vector<int> slot_index_;
  std::vector<int> edge_slot_;
  std::vector<int> thorn_slot_;
  std::vector<int> black_thorn_offset_;
};

inline Partition type_of_tree(const StarThornTree& t) { return t.type(); }

/// A star thorn tree with a bijection from white thorns to black thorns.
class PermutedThornTree {
 public:
  /// sigma[t] is the black thorn ordinal paired with white thorn ordinal t.
  PermutedThornTree(StarThornTree tree, std::vector<int> sigma);

  const StarThornTree& tree() const { return tree_; }
  const std::vector<int>& sigma() const { return sigma_; }
  int size() const { return tree_.size(); }
  Partition type() const { return tree_.type(); }

  /// The black-side element carrying the same symbol as a white slot: the edge
  /// itself for edge slots, the sigma partner for thorns.
  BlackElement partner_of_slot(int slot) const;
  /// Inverse of partner_of_slot.
  int slot_of(BlackElement e) const;

  /// The leftmost white slot is a real edge.
  bool has_p1() const { return tree_.size() > 0 && tree_.is_edge(0); }

  friend bool operator==(const PermutedThornTree&, const PermutedThornTree&) = default;
  friend auto operator<=>(const PermutedThornTree& a, const PermutedThornTree& b) {
    if (auto c = a.tree_ <=> b.tree_; c != 0) return c;
    return a.sigma_ <=> b.sigma_;
  }

 private:
  StarThornTree tree_;
  std::vector<int> sigma_;
  std::vector<int> sigma_inverse_;
};

/// A star thorn tree with labels 1..n on white slots and on black thorns.
/// An edge's label is the label of its white slot.
class LabeledThornTree {
 public:
  /// thorn_labels[b] lists vertex b's thorn labels counter-clockwise.
  LabeledThornTree(StarThornTree tree, std::vector<int> white_labels,
                   std::vector<std::vector<int>> thorn_labels);

  const StarThornTree& tree() const { return tree_; }
  const std::vector<int>& white_labels() const { return white_labels_; }
  const std::vector<std::vector<int>>& thorn_labels() const { return thorn_labels_; }
  int label_of_slot(int slot) const { return white_labels_[static_cast<std::size_t>(slot)]; }
  int label_of(BlackElement e) const;
  /// Labels around a vertex in clockwise reading order (edge last).
  std::vector<int> clockwise_labels(int vertex) const;
  /// White labels read right to left.
  std::vector<int> right_to_left() const;

  /// Forgets labels; sigma pairs equal labels.
  PermutedThornTree strip() const;

  friend bool operator==(const LabeledThornTree&, const LabeledThornTree&) = default;

 private:
  StarThornTree tree_;
  std::vector<int> white_labels_;
  std::vector<std::vector<int>> thorn_labels_;
};

/// Editable description of a permuted thorn tree with arbitrary ids: white
/// slots left to right (edges carry a vertex id, thorns a pairing key) and,
/// per vertex id, its thorn keys counter-clockwise from the edge.
struct TreeSketch {
  struct Slot {
    SlotKind kind;
    int id;
  };
  std::vector<Slot> white;
  std::map<int, std::vector<int>> vertices;
};

/// Vertex ids are the black indices; pairing keys are white thorn ordinals.
TreeSketch to_sketch(const PermutedThornTree& t);
/// Renumbers into canonical form; validates pairing keys and vertex ids.
PermutedThornTree from_sketch(const TreeSketch& sketch);

/// Every star thorn tree of type lambda.
std::vector<StarThornTree> all_star_thorn_trees(const Partition& lambda);
/// Every permuted thorn tree of type lambda, each exactly once.
void for_each_permuted_tree(const Partition& lambda,
                            const std::function<void(const PermutedThornTree&)>& visit,
                            const Budget& budget = {});
std::vector<PermutedThornTree> all_permuted_trees(const Partition& lambda, const Budget& budget = {});

/// Where lift inserts: a new white thorn before white slot `white_pos`
/// (0..n), and a new black thorn at counter-clockwise index `thorn_pos`
/// (0..thorns_of(vertex)) of `vertex`. The two are paired.
struct LiftSite {
  int white_pos = 0;
  int vertex = 0;
  int thorn_pos = 0;
  friend auto operator<=>(const LiftSite&, const LiftSite&) = default;
};

/// Type goes from lambda to lambda^{up(deg(vertex))}; the new black thorn is
/// (vertex, thorn_pos) in the result.
PermutedThornTree lift(const PermutedThornTree& t, const LiftSite& site);
/// Removes a marked black thorn with its white partner. Returns the smaller
/// tree and the site that lifts it back.
std::pair<PermutedThornTree, LiftSite> drop(const PermutedThornTree& t, BlackElement marked);

}  // namespace starmap
