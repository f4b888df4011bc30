// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace kohnert {

RowPairing row_pairing(const Diagram& t, int i) {
  if (i < 1) throw std::invalid_argument("row index must be positive");
  RowPairing p;
  p.i = i;
  const auto lo = t.columns_in_row(i);
  const auto hi = t.columns_in_row(i + 1);
  // Merge both rows by column: openers in row i, closers in row i+1.
  std::vector<int> stack;
  std::size_t a = 0, b = 0;
  while (a < lo.size() || b < hi.size()) {
    if (b == hi.size() || (a < lo.size() && lo[a] < hi[b])) {
      stack.push_back(lo[a++]);
    } else if (a < lo.size() && lo[a] == hi[b]) {
      p.pairs.push_back({{lo[a], i}, {hi[b], i + 1}});
      ++a;
      ++b;
    } else {
      if (!stack.empty()) {
        p.pairs.push_back({{stack.back(), i}, {hi[b], i + 1}});
        stack.pop_back();
      } else {
        p.unpaired_high.push_back({hi[b], i + 1});
      }
      ++b;
    }
  }
  for (int c : stack) p.unpaired_low.push_back({c, i});
  return p;
}

std::optional<Diagram> raising(const Diagram& t, int i) {
  const RowPairing p = row_pairing(t, i);
  if (p.unpaired_high.empty()) return std::nullopt;
  const Cell x = p.unpaired_high.back();
  return t.moved(x, {x.col, i});
}

std::optional<Diagram> lowering_lift(const Diagram& t, int i) {
  const RowPairing p = row_pairing(t, i);
  if (p.unpaired_low.empty()) return std::nullopt;
  const Cell x = p.unpaired_low.front();
  return t.moved(x, {x.col, i + 1});
}

std::optional<Diagram> lowering(const Diagram& t, int i, const KohnertSet& ctx) {
  if (!ctx.contains(t)) throw std::invalid_argument("lowering: diagram outside its context");
  auto s = lowering_lift(t, i);
  if (!s || !ctx.contains(*s)) return std::nullopt;
  return s;
}

ColumnPairing column_pairing(const Diagram& t, int c) {
  if (c < 1) throw std::invalid_argument("column index must be positive");
  ColumnPairing p;
  p.c = c;
  auto left = t.rows_in_column(c);
  auto right = t.rows_in_column(c + 1);
  std::reverse(left.begin(), left.end());
  std::reverse(right.begin(), right.end());
  // Scan rows from the top: column-c cells open, column-(c+1) cells close.
  std::vector<int> stack;
  std::size_t a = 0, b = 0;
  while (a < left.size() || b < right.size()) {
    if (b == right.size() || (a < left.size() && left[a] > right[b])) {
      stack.push_back(left[a++]);
    } else if (a < left.size() && left[a] == right[b]) {
      p.pairs.push_back({{c + 1, right[b]}, {c, left[a]}});
      ++a;
      ++b;
    } else {
      if (!stack.empty()) {
        p.pairs.push_back({{c + 1, right[b]}, {c, stack.back()}});
        stack.pop_back();
      } else {
        p.unpaired_right.push_back({c + 1, right[b]});
      }
      ++b;
    }
  }
  for (auto it = stack.begin(); it != stack.end(); ++it) p.unpaired_left.push_back({c, *it});
  return p;
}

Diagram rectify_step(const Diagram& t, int c) {
  const ColumnPairing p = column_pairing(t, c);
  if (p.unpaired_right.empty()) return t;
  const Cell x = p.unpaired_right.back();
  return t.moved(x, {c, x.row});
}

Diagram rectify_column(const Diagram& t, int c) {
  Diagram cur = t;
  for (;;) {
    Diagram next = rectify_step(cur, c);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_rectified(const Diagram& t) {
  const int cols = t.max_col();
  const int rows = t.max_row();
  for (int c = 1; c < cols; ++c) {
    const auto left = t.rows_in_column(c);
    const auto right = t.rows_in_column(c + 1);
    for (int r = 1; r <= rows; ++r) {
      auto above = [r](const std::vector<int>& v) {
        return std::count_if(v.begin(), v.end(), [r](int s) { return s >= r; });
      };
      if (above(left) < above(right)) return false;
    }
  }
  return true;
}

Diagram rectify(const Diagram& t) {
  Diagram cur = t;
  while (!is_rectified(cur))
    for (int c = cur.max_col() - 1; c >= 1; --c) cur = rectify_column(cur, c);
  return cur;
}

Diagram rectify_random_order(const Diagram& t, std::mt19937_64& rng) {
  Diagram cur = t;
  for (;;) {
    std::vector<int> eligible;
    for (int c = 1; c < cur.max_col(); ++c)
      if (!column_pairing(cur, c).unpaired_right.empty()) eligible.push_back(c);
    if (eligible.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    cur = rectify_step(cur, eligible[pick(rng)]);
  }
}

CrystalGraph crystal_graph(const KohnertSet& kd, bool allow_non_southwest) {
  if (!allow_non_southwest && !is_southwest(kd.source))
    throw NotSouthwest("crystal structure is only guaranteed for southwest diagrams");
  CrystalGraph g;
  g.nodes = kd.members;
  g.index = kd.index;
  g.max_index = std::max(0, kd.source.max_row() - 1);
  const std::size_t n = g.nodes.size();
  g.raise.assign(n, std::vector<std::size_t>(g.max_index, CrystalGraph::npos));

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t v = 0; v < n; ++v) {
    for (int i = 1; i <= g.max_index; ++i) {
      auto img = raising(g.nodes[v], i);
      if (!img) continue;
      auto it = g.index.find(*img);
      if (it == g.index.end()) {
        g.escaping.push_back({v, i, std::move(*img)});
        continue;
      }
      g.raise[v][i - 1] = it->second;
      g.edges.push_back({v, i, it->second});
      parent[find(v)] = find(it->second);
    }
  }
  // Components numbered by their smallest node id.
  std::vector<std::size_t> comp_id(n, CrystalGraph::npos);
  g.component_of.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (comp_id[root] == CrystalGraph::npos) {
      comp_id[root] = g.components.size();
      g.components.emplace_back();
    }
    g.component_of[v] = comp_id[root];
    g.components[comp_id[root]].push_back(v);
  }
  g.highest_weights.assign(g.components.size(), {});
  for (std::size_t v = 0; v < n; ++v) {
    bool top = true;
    for (int i = 1; i <= g.max_index && top; ++i)
      if (g.raise[v][i - 1] != CrystalGraph::npos) top = false;
    // An escaping edge still means the operator is defined.
    for (const auto& e : g.escaping)
      if (e.from == v) top = false;
    if (top) g.highest_weights[g.component_of[v]].push_back(v);
  }
  return g;
}

namespace {

const char* edge_color(int i) {
  static const char* palette[] = {"blue", "purple", "darkgreen", "red", "orange",
                                  "brown", "magenta", "cyan", "gray"};
  return palette[(i - 1) % 9];
}

}  // namespace

std::string crystal_to_dot(const CrystalGraph& g, const std::vector<std::string>& annotations) {
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"component " << k;
    if (k < annotations.size() && !annotations[k].empty()) os << ": " << annotations[k];
    os << "\";\n";
    for (std::size_t v : g.components[k]) os << "    " << dot_node_name(g.nodes[v]) << ";\n";
    os << "  }\n";
  }
  for (const CrystalEdge& e : g.edges)
    os << "  " << dot_node_name(g.nodes[e.to]) << " -> " << dot_node_name(g.nodes[e.from])
       << " [label=\"" << e.i << "\", color=" << edge_color(e.i) << ", class=\"f" << e.i
       << "\"];\n";
  for (const EscapingEdge& e : g.escaping)
    os << "  " << dot_node_name(g.nodes[e.from]) << " -> " << dot_node_name(e.image)
       << " [label=\"e" << e.i << "\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::string crystal_components_json(const CrystalGraph& g) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    nlohmann::ordered_json c;
    c["component_id"] = k;
    c["size"] = g.components[k].size();
    if (!g.highest_weights[k].empty()) {
      const Diagram& u = g.nodes[g.highest_weights[k].front()];
      c["highest_weight_diagram"] = format_grid(u);
      c["partition"] = weight(u);
    } else {
      c["highest_weight_diagram"] = nullptr;
      c["partition"] = nullptr;
    }
    arr.push_back(std::move(c));
  }
  return arr.dump(2);
}

}  // namespace kohnert
