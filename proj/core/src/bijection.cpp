#include "starmap/bijection.hpp"

#include <algorithm>

#include "starmap/error.hpp"

namespace starmap {

LabeledThornTree psi_label(const BlackPartitionedMap& map) {
  if (!map.is_star()) {
    throw InvalidInput("psi: alpha = " + map.alpha().to_cycle_string() +
                       " is not a long cycle; white labels need a single white vertex");
  }
  const int n = map.size();
  const Permutation& alpha = map.alpha();
  const Permutation& beta = map.beta();
  const SetPartition& pi = map.pi();

  // alpha_1 = 1 sits on the rightmost slot, alpha_n on the leftmost.
  std::vector<int> white_labels(static_cast<std::size_t>(n));
  std::vector<int> slot_of_label(static_cast<std::size_t>(n + 1));
  for (int k = 1, label = 1; k <= n; ++k, label = alpha(label)) {
    white_labels[static_cast<std::size_t>(n - k)] = label;
    slot_of_label[static_cast<std::size_t>(label)] = n - k;
  }

  std::vector<SlotKind> white(static_cast<std::size_t>(n), SlotKind::Thorn);
  for (const auto& block : pi.blocks()) {
    white[static_cast<std::size_t>(slot_of_label[static_cast<std::size_t>(beta(block.back()))])] = SlotKind::Edge;
  }

  const auto cycles = beta.cycles();  // max last, decreasing maxima
  std::vector<std::vector<int>> thorn_labels;
  std::vector<int> thorn_counts;
  for (int s = 0; s < n; ++s) {
    if (white[static_cast<std::size_t>(s)] != SlotKind::Edge) continue;
    const int edge_label = white_labels[static_cast<std::size_t>(s)];
    const int block = pi.block_of(edge_label);
    std::vector<int> labels;
    bool first = true;
    for (const auto& cycle : cycles) {
      if (pi.block_of(cycle.back()) != block) continue;
      // The first cycle of a block is the one holding its maximum; it starts
      // with the edge label, which is not a thorn.
      labels.insert(labels.end(), cycle.begin() + (first ? 1 : 0), cycle.end());
      first = false;
    }
    thorn_counts.push_back(static_cast<int>(labels.size()));
    thorn_labels.push_back(std::move(labels));
  }
  return LabeledThornTree(StarThornTree(std::move(white), std::move(thorn_counts)), std::move(white_labels),
                          std::move(thorn_labels));
}

PermutedThornTree psi(const BlackPartitionedMap& map) { return psi_label(map).strip(); }

BlackPartitionedMap map_of_labeled(const LabeledThornTree& labeled) {
  const StarThornTree& tree = labeled.tree();
  const int n = tree.size();
  std::vector<int> beta_images(static_cast<std::size_t>(n), 0);
  std::vector<SetPartition::Block> blocks;
  for (int v = 0; v < tree.black_count(); ++v) {
    const std::vector<int> reading = labeled.clockwise_labels(v);
    // Runs starting at left-to-right maxima are cycles written backwards.
    std::size_t start = 0;
    while (start < reading.size()) {
      std::size_t end = start + 1;
      while (end < reading.size() && reading[end] < reading[start]) ++end;
      for (std::size_t t = start; t < end; ++t) {
        const int image = t == start ? reading[end - 1] : reading[t - 1];
        beta_images[static_cast<std::size_t>(reading[t] - 1)] = image;
      }
      start = end;
    }
    blocks.push_back(reading);
  }
  BlackPartitionedMap map(Permutation::from_images(beta_images), SetPartition(n, std::move(blocks)));
  std::vector<int> walk;
  for (int k = 0, label = 1; k < n; ++k, label = map.alpha()(label)) walk.push_back(label);
  if (walk != labeled.right_to_left()) {
    throw InvalidInput("labeled tree: white labels do not spell the cycle of (1 2 ... n) beta^{-1}");
  }
  return map;
}

InverseOutcome psi_inverse(const PermutedThornTree& t) {
  const StarThornTree& tree = t.tree();
  const int n = tree.size();
  if (n == 0) throw InvalidInput("psi_inverse: empty tree");

  std::vector<int> slot_label(static_cast<std::size_t>(n), 0);
  std::vector<int> label_slot(static_cast<std::size_t>(n + 1), -1);
  // Per black vertex: which clockwise positions carry a retrieved label, and
  // the first position that does not.
  std::vector<std::vector<char>> retrieved;
  std::vector<int> first_open(static_cast<std::size_t>(tree.black_count()), 0);
  for (int v = 0; v < tree.black_count(); ++v) retrieved.emplace_back(static_cast<std::size_t>(tree.degree(v)), 0);
  auto position = [&](BlackElement e) { return e.is_edge() ? tree.degree(e.vertex) - 1 : tree.degree(e.vertex) - 2 - e.thorn; };
  auto element_at = [&](int v, int pos) {
    const int d = tree.degree(v);
    return pos == d - 1 ? BlackElement{v, BlackElement::kEdge} : BlackElement{v, d - 2 - pos};
  };
  auto place = [&](int label, int slot) {
    slot_label[static_cast<std::size_t>(slot)] = label;
    label_slot[static_cast<std::size_t>(label)] = slot;
    const BlackElement e = t.partner_of_slot(slot);
    auto& flags = retrieved[static_cast<std::size_t>(e.vertex)];
    flags[static_cast<std::size_t>(position(e))] = 1;
    int& open = first_open[static_cast<std::size_t>(e.vertex)];
    while (open < static_cast<int>(flags.size()) && flags[static_cast<std::size_t>(open)]) ++open;
  };

  place(1, n - 1);
  for (int i = 1; i < n; ++i) {
    const BlackElement carrier = t.partner_of_slot(label_slot[static_cast<std::size_t>(i)]);
    const int v = carrier.vertex;
    const int r = position(carrier);
    const int d = tree.degree(v);
    const int open = first_open[static_cast<std::size_t>(v)];
    BlackElement image;
    if (open < r) {
      // An unretrieved (larger) label sits left of i: i continues a cycle.
      image = element_at(v, r - 1);
    } else if (open < d) {
      // i is a left-to-right maximum; its cycle closes right before the next one.
      image = element_at(v, open - 1);
    } else {
      // Vertex completed: i is the block maximum.
      image = element_at(v, d - 1);
    }
    const int beta_slot = t.slot_of(image);
    const int next = beta_slot == 0 ? n - 1 : beta_slot - 1;
    if (slot_label[static_cast<std::size_t>(next)] != 0) {
      return InverseFailure{i, beta_slot, next, slot_label[static_cast<std::size_t>(next)]};
    }
    place(i + 1, next);
  }

  std::vector<std::vector<int>> thorn_labels;
  for (int v = 0; v < tree.black_count(); ++v) {
    std::vector<int> labels;
    for (const auto& e : tree.counter_clockwise(v)) labels.push_back(slot_label[static_cast<std::size_t>(t.slot_of(e))]);
    thorn_labels.push_back(std::move(labels));
  }
  LabeledThornTree labeled(tree, slot_label, std::move(thorn_labels));
  BlackPartitionedMap map = map_of_labeled(labeled);
  return InverseSuccess{std::move(map), std::move(labeled)};
}

std::vector<int> AuxGraph::find_cycle() const {
  std::vector<int> state(static_cast<std::size_t>(vertex_count), 0);  // 0 new, 1 on path, 2 done
  for (int start = 0; start < vertex_count; ++start) {
    std::vector<int> path;
    int v = start;
    while (v != -1 && state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = successor[static_cast<std::size_t>(v)];
    }
    if (v != -1 && state[static_cast<std::size_t>(v)] == 1) {
      std::vector<int> cycle(std::find(path.begin(), path.end(), v), path.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      return cycle;
    }
    for (int u : path) state[static_cast<std::size_t>(u)] = 2;
  }
  return {};
}

AuxGraph aux_graph(const PermutedThornTree& t) {
  if (!t.has_p1()) throw InvalidInput("aux_graph: the leftmost white slot is a thorn (no P1)");
  const StarThornTree& tree = t.tree();
  AuxGraph g;
  g.vertex_count = tree.black_count();
  g.root = tree.vertex_at(0);
  g.successor.assign(static_cast<std::size_t>(g.vertex_count), -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v == g.root) continue;
    const int s = tree.edge_slot(v);
    if (s == 0) throw Inconsistency("aux_graph: non-root vertex on the leftmost slot");
    g.successor[static_cast<std::size_t>(v)] = t.partner_of_slot(s - 1).vertex;
  }
  return g;
}

Classification classify(const PermutedThornTree& t) {
  if (!t.has_p1()) return NoP1{};
  auto cycle = aux_graph(t).find_cycle();
  if (cycle.empty()) return InImage{};
  return CycleFail{std::move(cycle)};
}

ContractResult contract(const PermutedThornTree& t, int marked_vertex) {
  const AuxGraph g = aux_graph(t);
  const StarThornTree& tree = t.tree();
  if (marked_vertex < 0 || marked_vertex >= tree.black_count()) throw InvalidInput("contract: no such black vertex");
  if (marked_vertex == g.root) throw InvalidInput("contract: the marked vertex is the root vertex");
  const int target = g.successor[static_cast<std::size_t>(marked_vertex)];
  if (target == marked_vertex) throw InvalidInput("contract: the marked vertex is a loop of the auxiliary graph");

  const int edge = tree.edge_slot(marked_vertex);
  const BlackElement left_partner = t.partner_of_slot(edge - 1);
  const int k = tree.degree(marked_vertex);
  const int j = tree.degree(target);

  TreeSketch sketch = to_sketch(t);
  std::vector<int> merged = sketch.vertices[marked_vertex];
  const auto& own = sketch.vertices[target];
  merged.insert(merged.end(), own.begin(), own.end());
  sketch.vertices[target] = std::move(merged);
  sketch.vertices.erase(marked_vertex);
  sketch.white.erase(sketch.white.begin() + edge);

  const int new_target = target < marked_vertex ? target : target - 1;
  BlackElement marked{new_target, left_partner.is_edge() ? BlackElement::kEdge : left_partner.thorn + (k - 1)};
  return ContractResult{from_sketch(sketch), marked, j, k};
}

ExpandResult expand(const PermutedThornTree& t, BlackElement marked, int k) {
  if (!t.has_p1()) throw InvalidInput("expand: the tree lacks P1");
  const StarThornTree& tree = t.tree();
  if (marked.vertex < 0 || marked.vertex >= tree.black_count()) throw InvalidInput("expand: no such black vertex");
  const int degree = tree.degree(marked.vertex);
  if (k < 1 || k > degree) throw InvalidInput("expand: k must lie in 1..degree of the marked vertex");
  // Markable: the edge or one of the first j-1 clockwise thorns, i.e. ccw index >= k-1.
  if (!marked.is_edge() && (marked.thorn < k - 1 || marked.thorn >= tree.thorns_of(marked.vertex))) {
    throw InvalidInput("expand: the marked thorn would move to the new vertex");
  }
  const int white_slot = t.slot_of(marked);

  TreeSketch sketch = to_sketch(t);
  const int fresh = sketch.vertices.rbegin()->first + 1;
  auto& keys = sketch.vertices[marked.vertex];
  std::vector<int> moved(keys.begin(), keys.begin() + (k - 1));
  keys.erase(keys.begin(), keys.begin() + (k - 1));
  sketch.vertices[fresh] = std::move(moved);
  sketch.white.insert(sketch.white.begin() + white_slot + 1, {SlotKind::Edge, fresh});

  int new_vertex = 0;
  for (int s = 0; s <= white_slot; ++s) new_vertex += tree.is_edge(s) ? 1 : 0;
  return ExpandResult{from_sketch(sketch), new_vertex};
}

ProportionStats proportion_stats(const Partition& lambda, const Budget& budget) {
  ProportionStats stats{lambda, 0, 0, 0, 0, 0};
  unsigned long total = 0;
  unsigned long p1 = 0;
  unsigned long image = 0;
  for_each_permuted_tree(lambda, [&](const PermutedThornTree& t) {
    ++total;
    if (!t.has_p1()) return;
    ++p1;
    if (is_image(classify(t))) ++image;
  }, budget);
  stats.total = total;
  stats.with_p1 = p1;
  stats.in_image = image;
  if (total == 0 || p1 == 0) throw Inconsistency("proportion_stats: empty tree family for " + lambda.to_string());
  stats.p = ExactRational(stats.in_image, stats.total);
  stats.p.canonicalize();
  stats.p_prime = ExactRational(stats.in_image, stats.with_p1);
  stats.p_prime.canonicalize();
  return stats;
}

}  // namespace starmap
