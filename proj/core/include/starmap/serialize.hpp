#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "starmap/bijection.hpp"
#include "starmap/structures.hpp"

namespace starmap {

/// Keeps keys in insertion order so every writer fixes its field order.
using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
Json to_json(const Partition& lambda);
Json to_json(const SetPartition& pi);
/// {"n":..,"beta":[1-based images],"pi":[[sorted block],...]}
Json to_json(const BlackPartitionedMap& map);
/// {"n":..,"white":[{"edge":b}|{"thorn":t},...],"blacks":[{"thorns":c},...],
///  "sigma":[[white slot,[b,thorn index]],...]}
Json to_json(const PermutedThornTree& t);
/// The underlying permuted tree plus "labels": {"white":[...],"thorns":[[...],...]}.
Json to_json(const LabeledThornTree& t);
Json to_json(const BlackElement& e);
Json to_json(const AuxGraph& g);
Json to_json(const InverseOutcome& outcome);
Json to_json(const Classification& c);

/// Parses text, reporting syntax errors with their byte offset.
Json parse_json(std::string_view text);

enum class ObjectKind { Map, Tree };
/// Maps carry "beta", trees carry "white".
ObjectKind detect_kind(const Json& j);

/// Schema errors are ParseError with a JSON pointer; domain errors (a pi that
/// splits a cycle, a sigma that is not a bijection) are InvalidInput.
BlackPartitionedMap map_from_json(const Json& j);
PermutedThornTree tree_from_json(const Json& j);
BlackElement element_from_json(const Json& j, const std::string& path = "");

/// Canonical compact text.
std::string serialize(const BlackPartitionedMap& map);
std::string serialize(const PermutedThornTree& t);
BlackPartitionedMap deserialize_map(std::string_view text);
PermutedThornTree deserialize_tree(std::string_view text);

}  // namespace starmap
