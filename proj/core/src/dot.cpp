#include "starmap/dot.hpp"

#include <sstream>

namespace starmap {
namespace {

// a, b, ..., z, aa, ab, ...
std::string letter(int k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k = k / 26 - 1;
  } while (k >= 0);
  return s;
}

// Shared layout: white centre W, black vertices b<v>, thorn stubs.
template <class WhiteLabel, class BlackLabel>
std::string tree_dot(const StarThornTree& tree, WhiteLabel white_label, BlackLabel black_label) {
  std::ostringstream out;
  out << "graph thorn_tree {\n";
  out << "  W [shape=circle, label=\"\", style=solid];\n";
  for (int v = 0; v < tree.black_count(); ++v) {
    out << "  b" << v << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\"" << v << "\"];\n";
  }
  for (int s = 0; s < tree.size(); ++s) {
    if (tree.is_edge(s)) {
      out << "  W -- b" << tree.vertex_at(s) << " [label=\"" << white_label(s) << "\"];\n";
    } else {
      out << "  wt" << s << " [shape=point];\n";
      out << "  W -- wt" << s << " [label=\"" << white_label(s) << "\"];\n";
    }
  }
  for (int v = 0; v < tree.black_count(); ++v) {
    for (const BlackElement& e : tree.counter_clockwise(v)) {
      out << "  bt" << v << "_" << e.thorn << " [shape=point];\n";
      out << "  b" << v << " -- bt" << v << "_" << e.thorn << " [label=\"" << black_label(e) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const BlackPartitionedMap& map) {
  std::ostringstream out;
  out << "graph map {\n";
  const auto alpha_cycles = map.alpha().cycles();
  const auto beta_cycles = map.beta().cycles();
  std::vector<int> white_of(static_cast<std::size_t>(map.size()) + 1);
  std::vector<int> black_of(static_cast<std::size_t>(map.size()) + 1);
  for (std::size_t c = 0; c < alpha_cycles.size(); ++c) {
    out << "  w" << c << " [shape=circle, label=\"\"];\n";
    for (int k : alpha_cycles[c]) white_of[static_cast<std::size_t>(k)] = static_cast<int>(c);
  }
  for (std::size_t c = 0; c < beta_cycles.size(); ++c) {
    for (int k : beta_cycles[c]) black_of[static_cast<std::size_t>(k)] = static_cast<int>(c);
  }
  const auto& blocks = map.pi().blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out << "  subgraph cluster_" << b << " {\n    style=dashed;\n";
    for (std::size_t c = 0; c < beta_cycles.size(); ++c) {
      if (map.pi().block_of(beta_cycles[c].front()) == static_cast<int>(b)) {
        out << "    k" << c << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
      }
    }
    out << "  }\n";
  }
  for (int k = 1; k <= map.size(); ++k) {
    out << "  w" << white_of[static_cast<std::size_t>(k)] << " -- k" << black_of[static_cast<std::size_t>(k)]
        << " [label=\"" << k << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const PermutedThornTree& t) {
  const StarThornTree& tree = t.tree();
  auto white = [&](int s) {
    if (tree.is_edge(s)) return "e" + std::to_string(tree.vertex_at(s));
    return letter(tree.white_thorn_ordinal(s));
  };
  auto black = [&](const BlackElement& e) {
    return letter(tree.white_thorn_ordinal(t.slot_of(e)));
  };
  return tree_dot(tree, white, black);
}

std::string to_dot(const LabeledThornTree& t) {
  auto white = [&](int s) { return std::to_string(t.label_of_slot(s)); };
  auto black = [&](const BlackElement& e) { return std::to_string(t.label_of(e)); };
  return tree_dot(t.tree(), white, black);
}

std::string to_dot(const AuxGraph& g) {
  std::ostringstream out;
  out << "digraph aux {\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out << "  b" << v << " [shape=" << (v == g.root ? "doublecircle" : "circle") << "];\n";
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v != g.root) out << "  b" << v << " -> b" << g.successor[static_cast<std::size_t>(v)] << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace starmap
