// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kohnert {

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error(what), line(line_), column(column_) {}

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].col < 1 || cells_[i].row < 1)
      throw std::invalid_argument("cell coordinates must be positive");
    if (i > 0 && cells_[i] == cells_[i - 1])
      throw std::invalid_argument("duplicate cell in diagram");
  }
}

Diagram::Diagram(std::initializer_list<Cell> cells)
    : Diagram(std::vector<Cell>(cells)) {}

bool Diagram::contains(Cell x) const {
  return std::binary_search(cells_.begin(), cells_.end(), x);
}

int Diagram::max_row() const {
  int m = 0;
  for (const Cell& x : cells_) m = std::max(m, x.row);
  return m;
}

int Diagram::max_col() const { return cells_.empty() ? 0 : cells_.back().col; }

std::vector<int> Diagram::columns_in_row(int r) const {
  std::vector<int> out;
  for (const Cell& x : cells_)
    if (x.row == r) out.push_back(x.col);
  return out;
}

std::vector<int> Diagram::rows_in_column(int c) const {
  std::vector<int> out;
  auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{c, 0});
  for (; it != cells_.end() && it->col == c; ++it) out.push_back(it->row);
  return out;
}

std::vector<int> Diagram::column_weights() const {
  std::vector<int> w(max_col(), 0);
  for (const Cell& x : cells_) ++w[x.col - 1];
  return w;
}

Diagram Diagram::moved(Cell from, Cell to) const {
  Diagram out;
  out.cells_ = cells_;
  auto it = std::lower_bound(out.cells_.begin(), out.cells_.end(), from);
  if (it == out.cells_.end() || *it != from)
    throw std::invalid_argument("moved: source cell absent");
  out.cells_.erase(it);
  auto jt = std::lower_bound(out.cells_.begin(), out.cells_.end(), to);
  if (jt != out.cells_.end() && *jt == to)
    throw std::invalid_argument("moved: target cell occupied");
  out.cells_.insert(jt, to);
  return out;
}

Diagram Diagram::inserted(Cell x) const {
  Diagram out;
  out.cells_ = cells_;
  auto jt = std::lower_bound(out.cells_.begin(), out.cells_.end(), x);
  if (jt != out.cells_.end() && *jt == x)
    throw std::invalid_argument("inserted: cell occupied");
  out.cells_.insert(jt, x);
  return out;
}

Diagram Diagram::erased(Cell x) const {
  Diagram out;
  out.cells_ = cells_;
  auto it = std::lower_bound(out.cells_.begin(), out.cells_.end(), x);
  if (it == out.cells_.end() || *it != x)
    throw std::invalid_argument("erased: cell absent");
  out.cells_.erase(it);
  return out;
}

std::size_t DiagramHash::operator()(const Diagram& d) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (const Cell& x : d.cells()) {
    h ^= static_cast<std::uint64_t>(x.col) * 0x9E3779B97F4A7C15ULL +
         static_cast<std::uint64_t>(x.row);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Composition weight(const Diagram& d) {
  Composition a(d.max_row(), 0);
  for (const Cell& x : d.cells()) ++a[x.row - 1];
  return a;
}

Diagram composition_diagram(const Composition& a) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] < 0) throw std::invalid_argument("negative part in composition");
    for (int c = 1; c <= a[r]; ++c) cells.push_back({c, static_cast<int>(r) + 1});
  }
  return Diagram(std::move(cells));
}

Diagram rothe_diagram(const Permutation& w) {
  std::vector<Cell> cells;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) cells.push_back({w[j], i + 1});
  return Diagram(std::move(cells));
}

bool is_southwest(const Diagram& d) {
  const auto& cs = d.cells();
  for (const Cell& hi : cs)      // (c1, r2)
    for (const Cell& lo : cs) {  // (c2, r1)
      if (lo.row < hi.row && hi.col < lo.col && !d.contains({hi.col, lo.row}))
        return false;
    }
  return true;
}

Composition lehmer_code(const Permutation& w) {
  Composition code(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++code[i];
  return code;
}

std::pair<Composition, Permutation> sort_and_minimal_perm(const Composition& a) {
  Composition lambda = a;
  std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  // Equal parts are matched in increasing order, which creates no inversion
  // among them and therefore gives the shortest permutation.
  Permutation w(a.size(), 0);
  std::vector<bool> used(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      if (!used[j] && lambda[j] == a[i]) {
        used[j] = true;
        w[i] = static_cast<int>(j) + 1;
        break;
      }
    }
  }
  return {lambda, w};
}

Composition padded(Composition a, std::size_t n) {
  if (a.size() < n) a.resize(n, 0);
  return a;
}

Composition trimmed(Composition a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Diagram parse_grid(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;  // (file line, content)
  int file_line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++file_line;
    if (line.empty() || line.front() != '#') lines.push_back({file_line, line});
    pos = end + 1;
  }
  std::vector<Cell> cells;
  const int total = static_cast<int>(lines.size());
  for (int k = 0; k < total; ++k) {
    const int row = total - k;
    const auto& [ln, line] = lines[k];
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] == 'O') {
        cells.push_back({static_cast<int>(j) + 1, row});
      } else if (line[j] != '.') {
        throw ParseError("unexpected character '" + std::string(1, line[j]) +
                             "' in diagram grid",
                         ln, static_cast<int>(j) + 1);
      }
    }
  }
  return Diagram(std::move(cells));
}

std::string format_grid(const Diagram& d) {
  const int rows = d.max_row();
  const int cols = d.max_col();
  std::string out;
  for (int r = rows; r >= 1; --r) {
    std::string line(cols, '.');
    for (int c : d.columns_in_row(r)) line[c - 1] = 'O';
    out += line;
    out += '\n';
  }
  return out;
}

Diagram shifted(const Diagram& d, int dc, int dr) {
  std::vector<Cell> cells;
  cells.reserve(d.size());
  for (const Cell& x : d.cells()) cells.push_back({x.col + dc, x.row + dr});
  return Diagram(std::move(cells));
}

std::string format_composition(const Composition& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string format_permutation(const Permutation& w) {
  std::ostringstream os;
  bool wide = false;
  for (int v : w) wide = wide || v > 9;
  for (std::size_t i = 0; i < w.size(); ++i) os << (wide && i ? "," : "") << w[i];
  return os.str();
}

Composition parse_int_list(std::string_view text) {
  Composition out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) {
      if (text.empty()) break;
      throw ParseError("empty entry in integer list", 1, static_cast<int>(pos) + 1);
    }
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("invalid integer '" + std::string(tok) + "'", 1,
                       static_cast<int>(pos) + 1);
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace kohnert
