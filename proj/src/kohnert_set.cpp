// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/kohnert_set.hpp"

#include <cstdlib>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace kohnert {

std::optional<Diagram> kohnert_move(const Diagram& d, int r) {
  if (r < 1) throw std::invalid_argument("row index must be positive");
  const auto cols = d.columns_in_row(r);
  if (cols.empty()) return std::nullopt;
  const int c = cols.back();
  for (int s = r - 1; s >= 1; --s)
    if (!d.contains({c, s})) return d.moved({c, r}, {c, s});
  return std::nullopt;
}

std::vector<std::pair<Diagram, int>> reverse_kohnert_moves(const Diagram& t,
                                                           int row_ceiling) {
  std::vector<std::pair<Diagram, int>> out;
  for (const Cell& x : t.cells()) {
    // The moved cell jumped exactly the occupied run above its landing spot.
    int r = x.row + 1;
    while (t.contains({x.col, r})) ++r;
    if (row_ceiling > 0 && r > row_ceiling) continue;
    const auto row_cols = t.columns_in_row(r);
    if (!row_cols.empty() && row_cols.back() > x.col) continue;
    out.push_back({t.moved(x, {x.col, r}), r});
  }
  return out;
}

std::size_t KohnertSet::id(const Diagram& t) const {
  auto it = index.find(t);
  if (it == index.end()) throw std::out_of_range("diagram is not a member");
  return it->second;
}

std::size_t default_member_bound() {
  if (const char* env = std::getenv("KOHNERT_MAX_DIAGRAMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

KohnertSet generate_kd(const Diagram& d, std::size_t max_members) {
  if (max_members == 0) max_members = default_member_bound();
  KohnertSet kd;
  kd.source = d;
  kd.members.push_back(d);
  kd.index.emplace(d, 0);
  const int rows = d.max_row();
  for (std::size_t head = 0; head < kd.members.size(); ++head) {
    for (int r = 2; r <= rows; ++r) {
      auto child = kohnert_move(kd.members[head], r);
      if (!child) continue;
      auto [it, fresh] = kd.index.try_emplace(*child, kd.members.size());
      if (fresh) {
        if (kd.members.size() >= max_members)
          throw ResourceLimit("Kohnert closure exceeds " + std::to_string(max_members) +
                              " diagrams (raise KOHNERT_MAX_DIAGRAMS)");
        kd.members.push_back(std::move(*child));
      }
      kd.edges.push_back({head, it->second, r});
    }
  }
  return kd;
}

Polynomial kohnert_polynomial(const KohnertSet& kd) {
  const int n = kd.source.max_row();
  Polynomial p(n);
  for (const Diagram& t : kd.members) p.add_term(padded(weight(t), n), 1);
  return p;
}

Polynomial kohnert_polynomial(const Diagram& d) { return kohnert_polynomial(generate_kd(d)); }

std::string dot_node_name(const Diagram& d) {
  std::string g = format_grid(d);
  std::string out = "\"";
  for (char ch : g) {
    if (ch == '\n') out += "\\n";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string kd_to_dot(const KohnertSet& kd) {
  std::ostringstream os;
  os << "digraph kohnert {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const Diagram& t : kd.members) os << "  " << dot_node_name(t) << ";\n";
  for (const MoveEdge& e : kd.edges)
    os << "  " << dot_node_name(kd.members[e.from]) << " -> "
       << dot_node_name(kd.members[e.to]) << " [label=\"row=" << e.row << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string kd_to_json(const KohnertSet& kd) {
  nlohmann::ordered_json j;
  j["source"] = format_grid(kd.source);
  j["count"] = kd.members.size();
  auto arr = nlohmann::ordered_json::array();
  for (const Diagram& t : kd.members) {
    nlohmann::ordered_json m;
    m["grid"] = format_grid(t);
    m["weight"] = weight(t);
    arr.push_back(std::move(m));
  }
  j["members"] = std::move(arr);
  return j.dump(2);
}

}  // namespace kohnert
