// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_DIAGRAM_HPP
#define KOHNERT_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kohnert {

// Cells are (column, row), both 1-based, rows counted from the bottom.
struct Cell {
  int col = 1;
  int row = 1;
  auto operator<=>(const Cell&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column);
  int line;
  int column;
};

using Composition = std::vector<int>;  // weak composition, trailing zeros kept
using Permutation = std::vector<int>;  // one-line notation, values 1..n

// Finite set of cells kept sorted by (column, row).
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells);
  Diagram(std::initializer_list<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell x) const;

  int max_row() const;
  int max_col() const;
  std::vector<int> columns_in_row(int r) const;  // ascending
  std::vector<int> rows_in_column(int c) const;  // ascending
  std::vector<int> column_weights() const;       // length max_col()

  // Returns a copy with cell `from` replaced by `to`; `to` must be empty.
  Diagram moved(Cell from, Cell to) const;
  Diagram inserted(Cell x) const;
  Diagram erased(Cell x) const;

  bool operator==(const Diagram&) const = default;
  auto operator<=>(const Diagram& o) const { return cells_ <=> o.cells_; }

 private:
  std::vector<Cell> cells_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept;
};

Composition weight(const Diagram& d);
Diagram composition_diagram(const Composition& a);
Diagram rothe_diagram(const Permutation& w);
bool is_southwest(const Diagram& d);
Composition lehmer_code(const Permutation& w);

// lambda = decreasing sort of a; w is the shortest permutation with
// lambda[w(i)] = a[i] for every i.
std::pair<Composition, Permutation> sort_and_minimal_perm(const Composition& a);

// Pads with zeros or strips trailing zeros.
Composition padded(Composition a, std::size_t n);
Composition trimmed(Composition a);

// Grid text: top row first, 'O' for a cell, '.' for empty, '#' comments.
Diagram parse_grid(std::string_view text);
std::string format_grid(const Diagram& d);

// Cells of `d` shifted by (dc, dr). Resulting coordinates must stay positive.
Diagram shifted(const Diagram& d, int dc, int dr);

std::string format_composition(const Composition& a);
std::string format_permutation(const Permutation& w);
Composition parse_int_list(std::string_view text);

}  // namespace kohnert

#endif  // KOHNERT_DIAGRAM_HPP
