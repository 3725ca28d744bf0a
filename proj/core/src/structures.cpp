#include "starmap/structures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "starmap/error.hpp"

namespace starmap {

BlackPartitionedMap::BlackPartitionedMap(Permutation beta, SetPartition pi)
    : beta_(std::move(beta)), pi_(std::move(pi)), alpha_(beta_.size()) {
  if (pi_.size() != beta_.size()) {
    throw InvalidInput("map: beta has size " + std::to_string(beta_.size()) +
                       " but pi partitions 1.." + std::to_string(pi_.size()));
  }
  for (const auto& cycle : beta_.cycles()) {
    const int home = pi_.block_of(cycle.front());
    for (int k : cycle) {
      if (pi_.block_of(k) != home) {
        std::ostringstream os;
        os << "map: pi is not coarser than the orbits of beta: cycle (";
        for (std::size_t t = 0; t < cycle.size(); ++t) os << (t ? " " : "") << cycle[t];
        os << ") meets blocks";
        std::set<int> met;
        for (int x : cycle) met.insert(pi_.block_of(x));
        for (int b : met) {
          os << " {";
          const auto& block = pi_.block(b);
          for (std::size_t t = 0; t < block.size(); ++t) os << (t ? "," : "") << block[t];
          os << '}';
        }
        throw InvalidInput(os.str());
      }
    }
  }
  alpha_ = compose(canonical_long_cycle(beta_.size()), inverse(beta_));
}

BlackPartitionedMap new_map(const Permutation& beta, const SetPartition& pi) {
  return BlackPartitionedMap(beta, pi);
}

void for_each_map(const Partition& lambda, bool star_only,
                  const std::function<void(const BlackPartitionedMap&)>& visit, const Budget& budget) {
  if (lambda.size() > budget.pair_sweep) throw BudgetExceeded("for_each_map", lambda.size(), budget.pair_sweep);
  for_each_set_partition_of_type(lambda, [&](const SetPartition& pi) {
    for_each_permutation_in(pi, [&](const Permutation& beta) {
      BlackPartitionedMap m(beta, pi);
      if (!star_only || m.is_star()) visit(m);
    });
  });
}

StarThornTree::StarThornTree(std::vector<SlotKind> white, std::vector<int> black_thorns)
    : white_(std::move(white)), black_thorns_(std::move(black_thorns)) {
  const int n = size();
  slot_index_.assign(static_cast<std::size_t>(n), -1);
  int edges = 0;
  int thorns = 0;
  for (int s = 0; s < n; ++s) {
    if (white_[static_cast<std::size_t>(s)] == SlotKind::Edge) {
      slot_index_[static_cast<std::size_t>(s)] = edges++;
      edge_slot_.push_back(s);
    } else {
      slot_index_[static_cast<std::size_t>(s)] = thorns++;
      thorn_slot_.push_back(s);
    }
  }
  if (edges != black_count()) {
    throw InvalidInput("tree: " + std::to_string(edges) + " white edges but " +
                       std::to_string(black_count()) + " black vertices");
  }
  int black_total = 0;
  for (int c : black_thorns_) {
    if (c < 0) throw InvalidInput("tree: negative thorn count");
    black_thorn_offset_.push_back(black_total);
    black_total += c;
  }
  if (black_total != thorns) {
    throw InvalidInput("tree: " + std::to_string(thorns) + " white thorns but " +
                       std::to_string(black_total) + " black thorns");
  }
}

int StarThornTree::black_thorn_ordinal(BlackElement e) const {
  if (e.vertex < 0 || e.vertex >= black_count() || e.thorn < 0 || e.thorn >= thorns_of(e.vertex)) {
    throw InvalidInput("tree: no black thorn (" + std::to_string(e.vertex) + "," + std::to_string(e.thorn) + ")");
  }
  return black_thorn_offset_[static_cast<std::size_t>(e.vertex)] + e.thorn;
}

BlackElement StarThornTree::black_thorn_at(int ordinal) const {
  if (ordinal < 0 || ordinal >= thorn_count()) throw InvalidInput("tree: black thorn ordinal out of range");
  // Last vertex whose offset is <= ordinal; thornless vertices share offsets with their successor.
  auto it = std::upper_bound(black_thorn_offset_.begin(), black_thorn_offset_.end(), ordinal);
  const int v = static_cast<int>(it - black_thorn_offset_.begin()) - 1;
  return {v, ordinal - black_thorn_offset_[static_cast<std::size_t>(v)]};
}

std::vector<BlackElement> StarThornTree::clockwise(int vertex) const {
  std::vector<BlackElement> out;
  for (int t = thorns_of(vertex) - 1; t >= 0; --t) out.push_back({vertex, t});
  out.push_back({vertex, BlackElement::kEdge});
  return out;
}

std::vector<BlackElement> StarThornTree::counter_clockwise(int vertex) const {
  std::vector<BlackElement> out;
  for (int t = 0; t < thorns_of(vertex); ++t) out.push_back({vertex, t});
  return out;
}

Partition StarThornTree::type() const {
  std::vector<int> degrees;
  for (int c : black_thorns_) degrees.push_back(c + 1);
  return Partition(std::move(degrees));
}

PermutedThornTree::PermutedThornTree(StarThornTree tree, std::vector<int> sigma)
    : tree_(std::move(tree)), sigma_(std::move(sigma)) {
  const int m = tree_.thorn_count();
  if (static_cast<int>(sigma_.size()) != m) {
    throw InvalidInput("permuted tree: sigma has " + std::to_string(sigma_.size()) +
                       " entries for " + std::to_string(m) + " thorns");
  }
  sigma_inverse_.assign(static_cast<std::size_t>(m), -1);
  for (int t = 0; t < m; ++t) {
    const int b = sigma_[static_cast<std::size_t>(t)];
    if (b < 0 || b >= m || sigma_inverse_[static_cast<std::size_t>(b)] != -1) {
      throw InvalidInput("permuted tree: sigma is not a bijection between the thorn sets");
    }
    sigma_inverse_[static_cast<std::size_t>(b)] = t;
  }
}

BlackElement PermutedThornTree::partner_of_slot(int slot) const {
  if (tree_.is_edge(slot)) return {tree_.vertex_at(slot), BlackElement::kEdge};
  return tree_.black_thorn_at(sigma_[static_cast<std::size_t>(tree_.white_thorn_ordinal(slot))]);
}

int PermutedThornTree::slot_of(BlackElement e) const {
  if (e.is_edge()) return tree_.edge_slot(e.vertex);
  return tree_.white_thorn_slot(sigma_inverse_[static_cast<std::size_t>(tree_.black_thorn_ordinal(e))]);
}

LabeledThornTree::LabeledThornTree(StarThornTree tree, std::vector<int> white_labels,
                                   std::vector<std::vector<int>> thorn_labels)
    : tree_(std::move(tree)), white_labels_(std::move(white_labels)), thorn_labels_(std::move(thorn_labels)) {
  const int n = tree_.size();
  auto check_permutation = [n](const std::vector<int>& labels, const char* side) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int l : labels) {
      if (l < 1 || l > n || seen[static_cast<std::size_t>(l - 1)]) {
        throw InvalidInput(std::string("labeled tree: ") + side + " labels are not a permutation of 1..n");
      }
      seen[static_cast<std::size_t>(l - 1)] = 1;
    }
  };
  if (static_cast<int>(white_labels_.size()) != n) throw InvalidInput("labeled tree: wrong number of white labels");
  check_permutation(white_labels_, "white");
  if (static_cast<int>(thorn_labels_.size()) != tree_.black_count()) {
    throw InvalidInput("labeled tree: wrong number of black vertices");
  }
  std::vector<int> black_side;
  for (int v = 0; v < tree_.black_count(); ++v) {
    if (static_cast<int>(thorn_labels_[static_cast<std::size_t>(v)].size()) != tree_.thorns_of(v)) {
      throw InvalidInput("labeled tree: vertex " + std::to_string(v) + " has the wrong number of thorn labels");
    }
    black_side.push_back(white_labels_[static_cast<std::size_t>(tree_.edge_slot(v))]);
    black_side.insert(black_side.end(), thorn_labels_[static_cast<std::size_t>(v)].begin(),
                      thorn_labels_[static_cast<std::size_t>(v)].end());
  }
  check_permutation(black_side, "black");
}

int LabeledThornTree::label_of(BlackElement e) const {
  if (e.is_edge()) return label_of_slot(tree_.edge_slot(e.vertex));
  return thorn_labels_[static_cast<std::size_t>(e.vertex)][static_cast<std::size_t>(e.thorn)];
}

std::vector<int> LabeledThornTree::clockwise_labels(int vertex) const {
  std::vector<int> out;
  for (const auto& e : tree_.clockwise(vertex)) out.push_back(label_of(e));
  return out;
}

std::vector<int> LabeledThornTree::right_to_left() const {
  return {white_labels_.rbegin(), white_labels_.rend()};
}

PermutedThornTree LabeledThornTree::strip() const {
  const int n = tree_.size();
  std::vector<int> black_ordinal_of_label(static_cast<std::size_t>(n + 1), -1);
  for (int v = 0; v < tree_.black_count(); ++v) {
    for (int t = 0; t < tree_.thorns_of(v); ++t) {
      black_ordinal_of_label[static_cast<std::size_t>(label_of({v, t}))] = tree_.black_thorn_ordinal({v, t});
    }
  }
  std::vector<int> sigma;
  for (int ordinal = 0; ordinal < tree_.thorn_count(); ++ordinal) {
    sigma.push_back(black_ordinal_of_label[static_cast<std::size_t>(label_of_slot(tree_.white_thorn_slot(ordinal)))]);
  }
  return PermutedThornTree(tree_, std::move(sigma));
}

TreeSketch to_sketch(const PermutedThornTree& t) {
  const StarThornTree& tree = t.tree();
  TreeSketch sketch;
  for (int s = 0; s < tree.size(); ++s) {
    sketch.white.push_back({tree.white()[static_cast<std::size_t>(s)],
                            tree.is_edge(s) ? tree.vertex_at(s) : tree.white_thorn_ordinal(s)});
  }
  for (int v = 0; v < tree.black_count(); ++v) {
    auto& keys = sketch.vertices[v];
    for (const auto& e : tree.counter_clockwise(v)) keys.push_back(tree.white_thorn_ordinal(t.slot_of(e)));
  }
  return sketch;
}

PermutedThornTree from_sketch(const TreeSketch& sketch) {
  std::map<int, int> vertex_index;  // sketch id -> canonical index
  std::vector<SlotKind> white;
  std::map<int, int> white_ordinal_of_key;
  for (const auto& slot : sketch.white) {
    white.push_back(slot.kind);
    if (slot.kind == SlotKind::Edge) {
      if (!vertex_index.emplace(slot.id, static_cast<int>(vertex_index.size())).second) {
        throw InvalidInput("sketch: vertex id " + std::to_string(slot.id) + " has two edges");
      }
    } else if (!white_ordinal_of_key.emplace(slot.id, static_cast<int>(white_ordinal_of_key.size())).second) {
      throw InvalidInput("sketch: thorn key " + std::to_string(slot.id) + " repeated on the white side");
    }
  }
  if (vertex_index.size() != sketch.vertices.size()) {
    throw InvalidInput("sketch: vertex ids and white edges do not match");
  }
  std::vector<const std::vector<int>*> thorns_by_index(vertex_index.size(), nullptr);
  for (const auto& [id, keys] : sketch.vertices) {
    auto it = vertex_index.find(id);
    if (it == vertex_index.end()) throw InvalidInput("sketch: vertex id " + std::to_string(id) + " has no edge");
    thorns_by_index[static_cast<std::size_t>(it->second)] = &keys;
  }
  std::vector<int> black_thorns;
  std::map<int, int> black_ordinal_of_key;
  for (const auto* keys : thorns_by_index) {
    black_thorns.push_back(static_cast<int>(keys->size()));
    for (int key : *keys) {
      if (!black_ordinal_of_key.emplace(key, static_cast<int>(black_ordinal_of_key.size())).second) {
        throw InvalidInput("sketch: thorn key " + std::to_string(key) + " repeated on the black side");
      }
    }
  }
  StarThornTree tree(std::move(white), std::move(black_thorns));
  std::vector<int> sigma(white_ordinal_of_key.size(), -1);
  for (const auto& [key, ordinal] : white_ordinal_of_key) {
    auto it = black_ordinal_of_key.find(key);
    if (it == black_ordinal_of_key.end()) throw InvalidInput("sketch: thorn key " + std::to_string(key) + " unpaired");
    sigma[static_cast<std::size_t>(ordinal)] = it->second;
  }
  return PermutedThornTree(std::move(tree), std::move(sigma));
}

std::vector<StarThornTree> all_star_thorn_trees(const Partition& lambda) {
  const int n = lambda.size();
  const int p = lambda.length();
  std::vector<StarThornTree> out;
  const auto arrangements = distinct_arrangements(lambda);
  // Edge positions: all p-subsets of slots, via a selection mask permuted lexicographically.
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.end() - p, mask.end(), 1);
  do {
    std::vector<SlotKind> white;
    for (char bit : mask) white.push_back(bit ? SlotKind::Edge : SlotKind::Thorn);
    for (const auto& degrees : arrangements) {
      std::vector<int> thorns;
      for (int d : degrees) thorns.push_back(d - 1);
      out.emplace_back(white, std::move(thorns));
    }
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

void for_each_permuted_tree(const Partition& lambda,
                            const std::function<void(const PermutedThornTree&)>& visit,
                            const Budget& budget) {
  if (lambda.size() > budget.pair_sweep) {
    throw BudgetExceeded("all_permuted_trees", lambda.size(), budget.pair_sweep);
  }
  const int m = lambda.size() - lambda.length();
  for (const auto& tree : all_star_thorn_trees(lambda)) {
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      visit(PermutedThornTree(tree, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

std::vector<PermutedThornTree> all_permuted_trees(const Partition& lambda, const Budget& budget) {
  std::vector<PermutedThornTree> out;
  for_each_permuted_tree(lambda, [&](const PermutedThornTree& t) { out.push_back(t); }, budget);
  return out;
}

PermutedThornTree lift(const PermutedThornTree& t, const LiftSite& site) {
  const StarThornTree& tree = t.tree();
  if (site.white_pos < 0 || site.white_pos > tree.size()) throw InvalidInput("lift: white position out of range");
  if (site.vertex < 0 || site.vertex >= tree.black_count()) throw InvalidInput("lift: no such black vertex");
  if (site.thorn_pos < 0 || site.thorn_pos > tree.thorns_of(site.vertex)) {
    throw InvalidInput("lift: black thorn position out of range");
  }
  TreeSketch sketch = to_sketch(t);
  const int key = tree.thorn_count();
  sketch.white.insert(sketch.white.begin() + site.white_pos, {SlotKind::Thorn, key});
  auto& keys = sketch.vertices[site.vertex];
  keys.insert(keys.begin() + site.thorn_pos, key);
  return from_sketch(sketch);
}

std::pair<PermutedThornTree, LiftSite> drop(const PermutedThornTree& t, BlackElement marked) {
  const StarThornTree& tree = t.tree();
  if (marked.is_edge() || marked.vertex < 0 || marked.vertex >= tree.black_count() || marked.thorn < 0 ||
      marked.thorn >= tree.thorns_of(marked.vertex)) {
    throw InvalidInput("drop: the marked element must be a black thorn");
  }
  const int white_slot = t.slot_of(marked);
  TreeSketch sketch = to_sketch(t);
  sketch.white.erase(sketch.white.begin() + white_slot);
  auto& keys = sketch.vertices[marked.vertex];
  keys.erase(keys.begin() + marked.thorn);
  return {from_sketch(sketch), LiftSite{white_slot, marked.vertex, marked.thorn}};
}

}  // namespace starmap
