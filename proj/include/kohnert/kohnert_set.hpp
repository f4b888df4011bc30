// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_KOHNERT_SET_HPP
#define KOHNERT_KOHNERT_SET_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/polynomial.hpp"

namespace kohnert {

// Raised when a closure grows past its configured member bound.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Diagram> kohnert_move(const Diagram& d, int r);

// All (S, r) with kohnert_move(S, r) == t and r <= row_ceiling. A ceiling of
// 0 means unbounded; each cell of t has at most one lift, so the set is finite.
std::vector<std::pair<Diagram, int>> reverse_kohnert_moves(const Diagram& t,
                                                           int row_ceiling = 0);

struct MoveEdge {
  std::size_t from;
  std::size_t to;
  int row;
};

struct KohnertSet {
  Diagram source;
  std::vector<Diagram> members;  // breadth-first order, source first
  std::vector<MoveEdge> edges;   // single Kohnert moves
  std::unordered_map<Diagram, std::size_t, DiagramHash> index;

  bool contains(const Diagram& t) const { return index.count(t) != 0; }
  std::size_t id(const Diagram& t) const;
  std::size_t size() const { return members.size(); }
};

// Member bound: KOHNERT_MAX_DIAGRAMS if set, else 10^6.
std::size_t default_member_bound();

KohnertSet generate_kd(const Diagram& d, std::size_t max_members = 0);

// Sum of x^wt(T) over KD(d) in max_row(d) variables.
Polynomial kohnert_polynomial(const Diagram& d);
Polynomial kohnert_polynomial(const KohnertSet& kd);

std::string dot_node_name(const Diagram& d);
std::string kd_to_dot(const KohnertSet& kd);
std::string kd_to_json(const KohnertSet& kd);

}  // namespace kohnert

#endif  // KOHNERT_KOHNERT_SET_HPP
