#include "starmap/serialize.hpp"

#include <algorithm>

#include "starmap/error.hpp"

namespace starmap {
namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(what, path.empty() ? "/" : path);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "/" + key, "missing field");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

void expect_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; })) {
      schema_error(path + "/" + it.key(), "unexpected field");
    }
  }
}

}  // namespace

Json to_json(const Permutation& p) { return Json(p.images()); }
Json to_json(const Partition& lambda) { return Json(lambda.parts()); }
Json to_json(const SetPartition& pi) { return Json(pi.blocks()); }

Json to_json(const BlackPartitionedMap& map) {
  Json j;
  j["n"] = map.size();
  j["beta"] = to_json(map.beta());
  j["pi"] = to_json(map.pi());
  return j;
}

Json to_json(const BlackElement& e) {
  Json j;
  j["vertex"] = e.vertex;
  if (e.is_edge()) {
    j["edge"] = true;
  } else {
    j["thorn"] = e.thorn;
  }
  return j;
}

Json to_json(const PermutedThornTree& t) {
  const StarThornTree& tree = t.tree();
  Json j;
  j["n"] = tree.size();
  Json white = Json::array();
  for (int s = 0; s < tree.size(); ++s) {
    Json slot;
    if (tree.is_edge(s)) {
      slot["edge"] = tree.vertex_at(s);
    } else {
      slot["thorn"] = tree.white_thorn_ordinal(s);
    }
    white.push_back(std::move(slot));
  }
  j["white"] = std::move(white);
  Json blacks = Json::array();
  for (int v = 0; v < tree.black_count(); ++v) {
    Json b;
    b["thorns"] = tree.thorns_of(v);
    blacks.push_back(std::move(b));
  }
  j["blacks"] = std::move(blacks);
  Json sigma = Json::array();
  for (int s = 0; s < tree.size(); ++s) {
    if (tree.is_edge(s)) continue;
    const BlackElement e = t.partner_of_slot(s);
    sigma.push_back(Json::array({s, Json::array({e.vertex, e.thorn})}));
  }
  j["sigma"] = std::move(sigma);
  return j;
}

Json to_json(const LabeledThornTree& t) {
  Json j = to_json(t.strip());
  Json labels;
  labels["white"] = t.white_labels();
  labels["thorns"] = t.thorn_labels();
  j["labels"] = std::move(labels);
  return j;
}

Json to_json(const AuxGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count;
  j["root"] = g.root;
  Json edges = Json::array();
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v != g.root) edges.push_back(Json::array({v, g.successor[static_cast<std::size_t>(v)]}));
  }
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const InverseOutcome& outcome) {
  Json j;
  if (const auto* ok = std::get_if<InverseSuccess>(&outcome)) {
    j["status"] = "success";
    j["map"] = to_json(ok->map);
    j["alpha"] = ok->map.alpha().to_cycle_string();
    j["beta"] = ok->map.beta().to_cycle_string();
    j["pi"] = ok->map.pi().to_string();
    j["labeled"] = to_json(ok->labeled);
  } else {
    const auto& fail = std::get<InverseFailure>(outcome);
    j["status"] = "failure";
    j["step"] = fail.step;
    j["beta_slot"] = fail.beta_slot;
    j["collided_slot"] = fail.collided_slot;
    j["collided_label"] = fail.collided_label;
  }
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  if (std::holds_alternative<NoP1>(c)) {
    j["classification"] = "NoP1";
  } else if (const auto* cyc = std::get_if<CycleFail>(&c)) {
    j["classification"] = "CycleFail";
    j["cycle"] = cyc->cycle;
  } else {
    j["classification"] = "Image";
  }
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

ObjectKind detect_kind(const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  if (j.contains("beta")) return ObjectKind::Map;
  if (j.contains("white")) return ObjectKind::Tree;
  schema_error("", "neither a map (\"beta\") nor a tree (\"white\")");
}

BlackPartitionedMap map_from_json(const Json& j) {
  expect_keys(j, {"n", "beta", "pi"}, "");
  const int n = as_int(member(j, "n", ""), "/n");
  std::vector<int> images;
  const Json& beta = as_array(member(j, "beta", ""), "/beta");
  for (std::size_t k = 0; k < beta.size(); ++k) images.push_back(as_int(beta[k], "/beta/" + std::to_string(k)));
  if (static_cast<int>(images.size()) != n) schema_error("/beta", "expected " + std::to_string(n) + " images");
  std::vector<SetPartition::Block> blocks;
  const Json& pi = as_array(member(j, "pi", ""), "/pi");
  for (std::size_t b = 0; b < pi.size(); ++b) {
    const std::string path = "/pi/" + std::to_string(b);
    SetPartition::Block block;
    for (std::size_t t = 0; t < as_array(pi[b], path).size(); ++t) {
      block.push_back(as_int(pi[b][t], path + "/" + std::to_string(t)));
    }
    blocks.push_back(std::move(block));
  }
  return BlackPartitionedMap(Permutation::from_images(images), SetPartition(n, std::move(blocks)));
}

BlackElement element_from_json(const Json& j, const std::string& path) {
  expect_keys(j, {"vertex", "thorn", "edge"}, path);
  BlackElement e;
  e.vertex = as_int(member(j, "vertex", path), path + "/vertex");
  const bool has_thorn = j.contains("thorn");
  const bool has_edge = j.contains("edge");
  if (has_thorn == has_edge) schema_error(path, "exactly one of \"thorn\" or \"edge\" is required");
  if (has_edge) {
    if (!j["edge"].is_boolean() || !j["edge"].get<bool>()) schema_error(path + "/edge", "expected true");
    e.thorn = BlackElement::kEdge;
  } else {
    e.thorn = as_int(j["thorn"], path + "/thorn");
    if (e.thorn < 0) schema_error(path + "/thorn", "thorn index must be non-negative");
  }
  return e;
}

PermutedThornTree tree_from_json(const Json& j) {
  expect_keys(j, {"n", "white", "blacks", "sigma"}, "");
  const int n = as_int(member(j, "n", ""), "/n");
  const Json& white = as_array(member(j, "white", ""), "/white");
  if (static_cast<int>(white.size()) != n) schema_error("/white", "expected " + std::to_string(n) + " slots");
  std::vector<SlotKind> kinds;
  int edges = 0;
  int thorns = 0;
  for (std::size_t s = 0; s < white.size(); ++s) {
    const std::string path = "/white/" + std::to_string(s);
    const Json& slot = white[s];
    if (!slot.is_object() || slot.size() != 1) schema_error(path, "expected {\"edge\":b} or {\"thorn\":t}");
    if (slot.contains("edge")) {
      if (as_int(slot["edge"], path + "/edge") != edges) schema_error(path + "/edge", "edges must be numbered 0,1,... from the left");
      kinds.push_back(SlotKind::Edge);
      ++edges;
    } else if (slot.contains("thorn")) {
      if (as_int(slot["thorn"], path + "/thorn") != thorns) schema_error(path + "/thorn", "thorns must be numbered 0,1,... from the left");
      kinds.push_back(SlotKind::Thorn);
      ++thorns;
    } else {
      schema_error(path, "expected {\"edge\":b} or {\"thorn\":t}");
    }
  }
  std::vector<int> counts;
  const Json& blacks = as_array(member(j, "blacks", ""), "/blacks");
  for (std::size_t b = 0; b < blacks.size(); ++b) {
    const std::string path = "/blacks/" + std::to_string(b);
    expect_keys(blacks[b], {"thorns"}, path);
    counts.push_back(as_int(member(blacks[b], "thorns", path), path + "/thorns"));
  }
  StarThornTree tree(std::move(kinds), std::move(counts));

  const Json& sigma_json = as_array(member(j, "sigma", ""), "/sigma");
  std::vector<int> sigma(static_cast<std::size_t>(tree.thorn_count()), -1);
  for (std::size_t i = 0; i < sigma_json.size(); ++i) {
    const std::string path = "/sigma/" + std::to_string(i);
    const Json& pair = as_array(sigma_json[i], path);
    if (pair.size() != 2) schema_error(path, "expected [white slot, [vertex, thorn]]");
    const int slot = as_int(pair[0], path + "/0");
    const Json& target = as_array(pair[1], path + "/1");
    if (target.size() != 2) schema_error(path + "/1", "expected [vertex, thorn]");
    const BlackElement e{as_int(target[0], path + "/1/0"), as_int(target[1], path + "/1/1")};
    if (slot < 0 || slot >= n || tree.is_edge(slot)) schema_error(path + "/0", "not a white thorn slot");
    int& entry = sigma[static_cast<std::size_t>(tree.white_thorn_ordinal(slot))];
    if (entry != -1) schema_error(path + "/0", "white thorn paired twice");
    entry = tree.black_thorn_ordinal(e);
  }
  if (std::find(sigma.begin(), sigma.end(), -1) != sigma.end()) schema_error("/sigma", "some white thorn is unpaired");
  return PermutedThornTree(std::move(tree), std::move(sigma));
}

std::string serialize(const BlackPartitionedMap& map) { return to_json(map).dump(); }
std::string serialize(const PermutedThornTree& t) { return to_json(t).dump(); }
BlackPartitionedMap deserialize_map(std::string_view text) { return map_from_json(parse_json(text)); }
PermutedThornTree deserialize_tree(std::string_view text) { return tree_from_json(parse_json(text)); }

}  // namespace starmap
