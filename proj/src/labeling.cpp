// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/labeling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kohnert/crystal.hpp"

namespace kohnert {

Diagram Labeling::base() const {
  std::vector<Cell> cells;
  cells.reserve(labels.size());
  for (const auto& [x, v] : labels) cells.push_back(x);
  return Diagram(std::move(cells));
}

int Labeling::at(Cell x) const {
  auto it = labels.find(x);
  if (it == labels.end()) throw std::out_of_range("cell is not labeled");
  return it->second;
}

Labeling super_standard(const Diagram& d) {
  Labeling l;
  for (const Cell& x : d.cells()) l.labels.emplace(x, x.row);
  return l;
}

bool is_flagged(const Labeling& l) {
  return std::all_of(l.labels.begin(), l.labels.end(),
                     [](const auto& e) { return e.second >= e.first.row; });
}

bool is_strict(const Labeling& l) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [x, v] : l.labels)
    if (!seen.insert({x.col, v}).second) return false;
  return true;
}

Diagram labeling_diagram(const Labeling& l) {
  if (!is_strict(l)) throw std::invalid_argument("labeling repeats a label within a column");
  std::vector<Cell> cells;
  for (const auto& [x, v] : l.labels) cells.push_back({x.col, v});
  return Diagram(std::move(cells));
}

Labeling shifted(const Labeling& l, int dc) {
  Labeling out;
  for (const auto& [x, v] : l.labels) {
    if (x.col + dc < 1) throw std::invalid_argument("shift leaves the first quadrant");
    out.labels.emplace(Cell{x.col + dc, x.row}, v);
  }
  return out;
}

Labeling parse_labeled_grid(std::string_view text) {
  std::vector<std::string> lines;
  std::vector<int> line_numbers;
  std::size_t pos = 0;
  int number = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    lines.push_back(std::move(line));
    line_numbers.push_back(number);
  }
  Labeling l;
  const int height = static_cast<int>(lines.size());
  for (int k = 0; k < height; ++k) {
    const std::string& line = lines[k];
    const int row = height - k;
    int col = 0;
    for (std::size_t j = 0; j < line.size(); ++j) {
      ++col;
      const char ch = line[j];
      const int at_col = static_cast<int>(j) + 1;
      if (ch == '.') continue;
      int value = 0;
      if (ch >= '1' && ch <= '9') {
        value = ch - '0';
      } else if (ch == '[') {
        const std::size_t close = line.find(']', j);
        if (close == std::string::npos || close == j + 1)
          throw ParseError("unterminated bracketed label", line_numbers[k], at_col);
        for (std::size_t q = j + 1; q < close; ++q) {
          if (line[q] < '0' || line[q] > '9')
            throw ParseError("non-digit inside bracketed label", line_numbers[k],
                             static_cast<int>(q) + 1);
          value = value * 10 + (line[q] - '0');
          if (value > 1000000) throw ParseError("label too large", line_numbers[k], at_col);
        }
        if (value == 0) throw ParseError("labels must be positive", line_numbers[k], at_col);
        j = close;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", line_numbers[k],
                         at_col);
      }
      l.labels.emplace(Cell{col, row}, value);
    }
  }
  return l;
}

std::string format_labeled_grid(const Labeling& l) {
  const Diagram d = l.base();
  std::ostringstream os;
  for (int r = d.max_row(); r >= 1; --r) {
    for (int c = 1; c <= d.max_col(); ++c) {
      auto it = l.labels.find({c, r});
      if (it == l.labels.end()) os << '.';
      else if (it->second <= 9) os << it->second;
      else os << '[' << it->second << ']';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Cells of column c, highest first.
std::vector<Cell> column_cells_desc(const Labeling& l, int c) {
  std::vector<Cell> out;
  for (auto it = l.labels.lower_bound({c, 1}); it != l.labels.end() && it->first.col == c; ++it)
    out.push_back(it->first);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

LabelPairing label_pairing(const Labeling& l, int c) {
  if (c < 1) throw std::invalid_argument("column index must be positive");
  LabelPairing p;
  p.c = c;
  std::vector<Cell> available = column_cells_desc(l, c);
  for (const Cell& x : column_cells_desc(l, c + 1)) {
    const int lx = l.at(x);
    auto best = available.end();
    for (auto it = available.begin(); it != available.end(); ++it) {
      if (it->row < x.row) continue;
      const int ly = l.at(*it);
      if (ly > lx) continue;
      if (best == available.end() || ly > l.at(*best)) best = it;
    }
    if (best == available.end()) {
      p.unpaired.push_back(x);
    } else {
      p.partner.emplace(x, *best);
      available.erase(best);
    }
  }
  return p;
}

Labeling relabel_rectify(const Labeling& l, int c, SwapRule rule) {
  const LabelPairing p = label_pairing(l, c);
  std::map<Cell, int> next = l.labels;
  for (const Cell& x : p.unpaired) {
    for (;;) {
      const Cell* chosen = nullptr;
      for (const auto& [z, y] : p.partner) {
        if (z.row <= x.row) continue;
        if (l.at(y) <= next[x] && next[x] < next[z] && (!chosen || next[z] > next[*chosen]))
          chosen = &z;
      }
      if (!chosen) break;
      std::swap(next[x], next[*chosen]);
      if (rule == SwapRule::single) break;
    }
  }
  for (const auto& [z, y] : p.partner) next[z] = l.at(y);

  const ColumnPairing geo = column_pairing(l.base(), c);
  for (const Cell& x : geo.unpaired_right) {
    const int v = next.at(x);
    next.erase(x);
    next.emplace(Cell{c, x.row}, v);
  }
  return Labeling{std::move(next)};
}

Labeling rect_labeling(const Labeling& l, SwapRule rule) {
  constexpr int max_passes = 10000;
  Labeling cur = l;
  for (int pass = 0; pass < max_passes; ++pass) {
    const Labeling before = cur;
    for (int c = cur.base().max_col() - 1; c >= 1; --c) cur = relabel_rectify(cur, c, rule);
    if (cur == before && is_rectified(cur.base())) return cur;
  }
  throw std::runtime_error("rectified relabeling did not stabilize");
}

bool is_kohnert_tableau(const Labeling& l, const Composition& a) {
  const int n = static_cast<int>(a.size());
  // where[i][c] = row of label i in column c, 0 if absent.
  std::map<int, std::map<int, int>> where;
  for (const auto& [x, v] : l.labels) {
    if (v < 1 || v > n) return false;
    if (v < x.row) return false;  // (ii)
    if (!where[v].emplace(x.col, x.row).second) return false;
  }
  for (int i = 1; i <= n; ++i) {  // (i)
    const auto& cols = where[i];
    if (static_cast<int>(cols.size()) != a[i - 1]) return false;
    if (!cols.empty() && cols.rbegin()->first != a[i - 1]) return false;
  }
  for (const auto& [i, cols] : where) {  // (iii)
    int prev = 0;
    for (const auto& [c, r] : cols) {
      if (prev != 0 && r > prev) return false;
      prev = r;
    }
  }
  for (const auto& [x, j] : l.labels) {  // (iv)
    for (const auto& [y, i] : l.labels) {
      if (y.col != x.col || y.row <= x.row || i >= j) continue;
      auto it = where[i].find(x.col + 1);
      if (it == where[i].end() || it->second <= x.row) return false;
    }
  }
  return true;
}

std::string LabelingResult::reason() const {
  switch (status) {
    case LabelingStatus::ok:
      return "ok";
    case LabelingStatus::column_weights_differ:
      return "column weights differ";
    case LabelingStatus::not_well_defined:
      return "not well-defined: no cell of column " + std::to_string(failed_column) +
             " can take label " + std::to_string(failed_label);
  }
  return "unknown";
}

LabelingResult kohnert_labeling(const Diagram& t, const Diagram& d) {
  LabelingResult res;
  if (t.column_weights() != d.column_weights()) {
    res.status = LabelingStatus::column_weights_differ;
    return res;
  }
  Labeling& out = res.labeling;
  for (int c = t.max_col(); c >= 1; --c) {
    Labeling right;
    for (const auto& [x, v] : out.labels)
      if (x.col > c) right.labels.emplace(x, v);
    // Row of the column-(c+1) cell carrying each label after rectifying.
    std::map<int, int> anchor;
    if (!right.labels.empty()) {
      const Labeling rect = shifted(rect_labeling(shifted(right, -c)), c);
      for (const auto& [x, v] : rect.labels)
        if (x.col == c + 1) anchor[v] = std::max(anchor[v], x.row);
    }
    std::vector<int> cells = t.rows_in_column(c);
    std::vector<bool> used(cells.size(), false);
    for (int r : d.rows_in_column(c)) {
      auto it = anchor.find(r);
      const int floor = it == anchor.end() ? 1 : it->second;
      std::size_t k = 0;
      while (k < cells.size() && (used[k] || cells[k] < floor)) ++k;
      if (k == cells.size()) {
        res.status = LabelingStatus::not_well_defined;
        res.failed_column = c;
        res.failed_label = r;
        return res;
      }
      used[k] = true;
      out.labels.emplace(Cell{c, cells[k]}, r);
    }
  }
  return res;
}

namespace {

void require_southwest(const Diagram& d) {
  if (!is_southwest(d)) throw NotSouthwest("labeling criteria require a southwest diagram");
}

Labeling defined_labeling(const Diagram& t, const Diagram& d) {
  LabelingResult res = kohnert_labeling(t, d);
  if (!res.defined() || !is_flagged(res.labeling))
    throw std::invalid_argument("diagram is not a Kohnert diagram of the given source");
  return std::move(res.labeling);
}

bool yamanouchi_from(const Labeling& l) {
  const Labeling rect = rect_labeling(l);
  for (const auto& [x, v] : rect.labels) {
    if (v != x.row) return false;
    if (x.col > 1 && !rect.labels.count({x.col - 1, x.row})) return false;
  }
  return true;
}

bool quasi_yamanouchi_from(const Diagram& t, const Labeling& l) {
  for (int r = 1; r <= t.max_row(); ++r) {
    const auto row = t.columns_in_row(r);
    if (row.empty()) continue;
    const auto above = t.columns_in_row(r + 1);
    if (!above.empty() && above.back() >= row.front()) continue;
    if (l.at({row.front(), r}) != r) return false;
  }
  return true;
}

Composition trimmed_weight(const Diagram& t) { return trimmed(weight(t)); }

}  // namespace

bool membership(const Diagram& t, const Diagram& d) {
  require_southwest(d);
  const LabelingResult res = kohnert_labeling(t, d);
  return res.defined() && is_flagged(res.labeling);
}

bool is_yamanouchi(const Diagram& y, const Diagram& d) {
  require_southwest(d);
  return yamanouchi_from(defined_labeling(y, d));
}

std::vector<Diagram> yamanouchi_diagrams(const Diagram& d) {
  require_southwest(d);
  std::vector<Diagram> out;
  for (const Diagram& t : generate_kd(d).members)
    if (yamanouchi_from(defined_labeling(t, d))) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> demazure_expansion(const Diagram& d) {
  std::vector<Composition> out;
  for (const Diagram& y : yamanouchi_diagrams(d)) out.push_back(trimmed_weight(y));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_quasi_yamanouchi(const Diagram& t, const Diagram& d) {
  require_southwest(d);
  return quasi_yamanouchi_from(t, defined_labeling(t, d));
}

bool is_quasi_yamanouchi_by_lifting(const Diagram& t, const KohnertSet& kd) {
  if (!kd.contains(t)) throw std::invalid_argument("diagram is not in the closure");
  for (int r = 1; r <= t.max_row(); ++r) {
    const auto row = t.columns_in_row(r);
    if (row.empty()) continue;
    const auto above = t.columns_in_row(r + 1);
    if (!above.empty() && above.back() >= row.front()) continue;
    Diagram lifted = t;
    for (int c : row) lifted = lifted.moved({c, r}, {c, r + 1});
    if (kd.contains(lifted)) return false;
  }
  return true;
}

std::vector<Diagram> quasi_yamanouchi_diagrams(const Diagram& d) {
  require_southwest(d);
  std::vector<Diagram> out;
  for (const Diagram& t : generate_kd(d).members)
    if (quasi_yamanouchi_from(t, defined_labeling(t, d))) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> slide_expansion(const Diagram& d) {
  std::vector<Composition> out;
  for (const Diagram& t : quasi_yamanouchi_diagrams(d)) out.push_back(trimmed_weight(t));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vexillary_diagram(const Diagram& d) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= d.max_row(); ++r) rows.push_back(d.columns_in_row(r));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i];
      const auto& b = rows[j];
      if (!std::includes(a.begin(), a.end(), b.begin(), b.end()) &&
          !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return false;
    }
  return true;
}

VexillaryCheck vexillary_theorem_check(const Diagram& d) {
  VexillaryCheck v;
  v.single_term = demazure_expansion(d).size() == 1;
  v.vexillary = is_vexillary_diagram(d);
  return v;
}

std::optional<Diagram> column_swap(const Diagram& d, int c) {
  if (c < 1) throw std::invalid_argument("column index must be positive");
  const auto left = d.rows_in_column(c);
  const auto right = d.rows_in_column(c + 1);
  if (!std::includes(left.begin(), left.end(), right.begin(), right.end()) &&
      !std::includes(right.begin(), right.end(), left.begin(), left.end()))
    return std::nullopt;
  std::vector<Cell> cells;
  for (const Cell& x : d.cells()) {
    if (x.col == c) cells.push_back({c + 1, x.row});
    else if (x.col == c + 1) cells.push_back({c, x.row});
    else cells.push_back(x);
  }
  return Diagram(std::move(cells));
}

ComponentData component_demazure_data(const std::vector<Diagram>& component, const Diagram& d) {
  require_southwest(d);
  if (component.empty()) throw std::invalid_argument("empty component");
  const int max_index = std::max(0, d.max_row() - 1);
  std::vector<const Diagram*> tops;
  for (const Diagram& t : component) {
    bool top = true;
    for (int i = 1; i <= max_index && top; ++i)
      if (raising(t, i)) top = false;
    if (top) tops.push_back(&t);
  }
  if (tops.size() != 1) throw std::logic_error("component without a unique highest weight");
  const Diagram& u = *tops.front();

  ComponentData data;
  data.a = trimmed_weight(labeling_diagram(rect_labeling(defined_labeling(u, d))));
  auto [lambda, w] = sort_and_minimal_perm(data.a);
  if (trimmed(lambda) != trimmed_weight(u))
    throw std::logic_error("labeling content does not sort to the highest weight");
  data.lambda = std::move(lambda);
  data.w = std::move(w);
  return data;
}

}  // namespace kohnert
