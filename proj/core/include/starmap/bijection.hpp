#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "starmap/oracle.hpp"
#include "starmap/structures.hpp"

namespace starmap {

/// Labeled thorn tree of a black-partitioned star map:
///  - white slots carry the cycle (1 alpha(1) alpha^2(1) ...) from right to left;
///  - the slot labeled beta(max B) is an edge to the black vertex of block B;
///    every other slot is a thorn;
///  - each black vertex receives, counter-clockwise from its edge, the cycles
///    of beta inside its block in decreasing order of their maxima, each cycle
///    written from beta(max) to max, minus the edge label itself.
/// Throws InvalidInput for maps whose alpha is not a long cycle.
LabeledThornTree psi_label(const BlackPartitionedMap& map);

/// psi_label with labels forgotten; sigma pairs equally labeled thorns.
PermutedThornTree psi(const BlackPartitionedMap& map);

/// Reads beta, alpha and pi back from a labeled tree. The clockwise reading
/// around each black vertex splits into cycles at its left-to-right maxima.
BlackPartitionedMap map_of_labeled(const LabeledThornTree& labeled);

/// The inverse procedure stopped: label `step + 1` would have gone to a white
/// slot that already carries `collided_label`.
struct InverseFailure {
  int step = 0;             ///< i: the last label placed successfully
  int beta_slot = 0;        ///< white slot of the element chosen as beta(i)
  int collided_slot = 0;    ///< slot that would have received label i+1
  int collided_label = 0;   ///< label already on that slot
};

struct InverseSuccess {
  BlackPartitionedMap map;
  LabeledThornTree labeled;
};

using InverseOutcome = std::variant<InverseSuccess, InverseFailure>;

/// Runs the label-recovery procedure: label 1 on the rightmost white slot,
/// then for i = 1..n-1 locate beta(i) around the black vertex carrying i and
/// place label i+1 on the white slot immediately to the left of beta(i)'s
/// white partner (wrapping from the leftmost slot to the rightmost).
InverseOutcome psi_inverse(const PermutedThornTree& t);

/// Out-edges pi -> pi' between black vertices of a tree with property (P1).
struct AuxGraph {
  int vertex_count = 0;
  int root = 0;                ///< black vertex of the leftmost edge
  std::vector<int> successor;  ///< successor[root] == -1

  /// Vertices of the cycle reached from the smallest vertex that reaches
  /// one, in successor order starting at the cycle's smallest vertex; empty
  /// when the graph is a tree oriented towards the root.
  std::vector<int> find_cycle() const;
  bool is_tree() const { return find_cycle().empty(); }
};

/// For every black vertex other than the root: the white element left of its
/// edge, mapped through sigma when it is a thorn, ends on the successor.
/// Throws InvalidInput when the leftmost white slot is a thorn.
AuxGraph aux_graph(const PermutedThornTree& t);

struct NoP1 {
  friend bool operator==(const NoP1&, const NoP1&) = default;
};
struct CycleFail {
  std::vector<int> cycle;
  friend bool operator==(const CycleFail&, const CycleFail&) = default;
};
struct InImage {
  friend bool operator==(const InImage&, const InImage&) = default;
};
using Classification = std::variant<NoP1, CycleFail, InImage>;

/// Image membership through the auxiliary graph: (P1) and (P2).
Classification classify(const PermutedThornTree& t);
inline bool is_image(const Classification& c) { return std::holds_alternative<InImage>(c); }

/// A tree together with a marked element; contract marks a black element,
/// expand is given a marked black element and returns a marked vertex.
struct ContractResult {
  PermutedThornTree tree;
  BlackElement marked;  ///< edge or one of the first j-1 clockwise thorns of the merged vertex
  int j = 0;            ///< degree of the successor of the removed vertex
  int k = 0;            ///< degree of the removed vertex
};

/// Removes the marked vertex (not the root, successor distinct from itself)
/// with its edge; its thorns move to its successor after the successor's own
/// thorns in clockwise order. Marks the partner of the white element that
/// stood left of the removed edge.
ContractResult contract(const PermutedThornTree& t, int marked_vertex);

struct ExpandResult {
  PermutedThornTree tree;
  int marked_vertex = 0;
};

/// Inverse of contract for a given k: inserts a new edge right of the white
/// partner of `marked`, and moves the k-1 last clockwise thorns of the marked
/// element's vertex to the new vertex.
ExpandResult expand(const PermutedThornTree& t, BlackElement marked, int k);

struct ProportionStats {
  Partition lambda;
  BigInt total;      ///< all permuted trees of type lambda
  BigInt with_p1;    ///< those with (P1)
  BigInt in_image;   ///< those with (P1) and (P2)
  ExactRational p;        ///< in_image / total
  ExactRational p_prime;  ///< in_image / with_p1
};

ProportionStats proportion_stats(const Partition& lambda, const Budget& budget = {});

}  // namespace starmap
