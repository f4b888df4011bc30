// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_CRYSTAL_HPP
#define KOHNERT_CRYSTAL_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/kohnert_set.hpp"

namespace kohnert {

struct NotSouthwest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RowPairing {
  int i = 1;
  std::vector<std::pair<Cell, Cell>> pairs;  // (row i cell, row i+1 cell)
  std::vector<Cell> unpaired_low;            // row i, by column
  std::vector<Cell> unpaired_high;           // row i+1, by column
};

RowPairing row_pairing(const Diagram& t, int i);
std::optional<Diagram> raising(const Diagram& t, int i);
// Lifts the leftmost unpaired row-i cell, without any membership test.
std::optional<Diagram> lowering_lift(const Diagram& t, int i);
// As above, but the result must lie in ctx.
std::optional<Diagram> lowering(const Diagram& t, int i, const KohnertSet& ctx);

struct ColumnPairing {
  int c = 1;
  std::vector<std::pair<Cell, Cell>> pairs;  // (column c+1 cell, column c cell)
  std::vector<Cell> unpaired_right;          // column c+1, highest first
  std::vector<Cell> unpaired_left;           // column c, highest first
};

ColumnPairing column_pairing(const Diagram& t, int c);
Diagram rectify_step(const Diagram& t, int c);
Diagram rectify_column(const Diagram& t, int c);
bool is_rectified(const Diagram& t);
Diagram rectify(const Diagram& t);
// Applies single rectification steps at random eligible columns.
Diagram rectify_random_order(const Diagram& t, std::mt19937_64& rng);

struct CrystalEdge {
  std::size_t from;
  int i;
  std::size_t to;  // raising image of `from`
};

struct EscapingEdge {
  std::size_t from;
  int i;
  Diagram image;  // raising image outside the node set
};

struct CrystalGraph {
  std::vector<Diagram> nodes;
  std::unordered_map<Diagram, std::size_t, DiagramHash> index;
  int max_index = 0;  // operators 1..max_index
  std::vector<CrystalEdge> edges;
  std::vector<EscapingEdge> escaping;
  std::vector<std::size_t> component_of;
  std::vector<std::vector<std::size_t>> components;      // sorted node ids
  std::vector<std::vector<std::size_t>> highest_weights;  // per component

  // raise[node][i-1] is the target node or npos.
  std::vector<std::vector<std::size_t>> raise;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Refuses non-southwest sources unless allow_non_southwest is set, in which
// case raising images outside KD(D) are recorded as escaping edges.
CrystalGraph crystal_graph(const KohnertSet& kd, bool allow_non_southwest = false);

// Per-component text shown in the DOT comment and cluster label.
std::string crystal_to_dot(const CrystalGraph& g,
                           const std::vector<std::string>& annotations = {});
std::string crystal_components_json(const CrystalGraph& g);

}  // namespace kohnert

#endif  // KOHNERT_CRYSTAL_HPP
