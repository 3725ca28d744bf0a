#pragma once

#include "starmap/bijection.hpp"
#include "starmap/structures.hpp"

namespace starmap::fixtures {

// beta = (1)(2 5)(3 7)(4)(6), pi = {1,3,6,7} {2,5} {4}
inline BlackPartitionedMap example21_map() {
  return BlackPartitionedMap(Permutation::from_cycles(7, {{2, 5}, {3, 7}}),
                             SetPartition(7, {{1, 3, 6, 7}, {2, 5}, {4}}));
}

// Size 5: white E T E T T, the first black vertex has one thorn and the
// second two. Inverts to alpha = (1 3 2 4 5).
inline PermutedThornTree ex1_tree() {
  using K = SlotKind;
  StarThornTree tree({K::Edge, K::Thorn, K::Edge, K::Thorn, K::Thorn}, {1, 2});
  return PermutedThornTree(tree, {tree.black_thorn_ordinal({0, 0}), tree.black_thorn_ordinal({1, 1}),
                                  tree.black_thorn_ordinal({1, 0})});
}

// White E(a) T E(b) T with the first white thorn paired to b's thorn:
// b's successor is b itself.
inline PermutedThornTree selfloop4_tree() {
  using K = SlotKind;
  StarThornTree tree({K::Edge, K::Thorn, K::Edge, K::Thorn}, {1, 1});
  return PermutedThornTree(tree, {tree.black_thorn_ordinal({1, 0}), tree.black_thorn_ordinal({0, 0})});
}

}  // namespace starmap::fixtures
