#pragma once

#include <string>

#include "starmap/bijection.hpp"
#include "starmap/structures.hpp"

namespace starmap {

/// Bicolored map: one white vertex per cycle of alpha, one black vertex per
/// cycle of beta, black vertices clustered by block of pi, edges labeled 1..n.
std::string to_dot(const BlackPartitionedMap& map);
/// Permuted thorn tree with the symbolic labeling: paired thorns share a
/// letter, edges are e0, e1, ... from the left.
std::string to_dot(const PermutedThornTree& t);
/// Labeled tree with integer labels on every edge and thorn.
std::string to_dot(const LabeledThornTree& t);
/// Auxiliary graph; the root is drawn double-circled.
std::string to_dot(const AuxGraph& g);

}  // namespace starmap
