// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kohnert/crystal.hpp"
#include "kohnert/verify.hpp"
#include "test_util.hpp"

using namespace kohnert;

namespace {

// Parenthesis word with its cells; repeatedly deletes adjacent "()" pairs.
struct Letter {
  bool open;
  Cell cell;
};

std::vector<Letter> cancel(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k].open && !w[k + 1].open) {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

void check_row_pairing(const Diagram& t, int i) {
  std::vector<Letter> w;
  for (int c = 1; c <= t.max_col(); ++c) {
    if (t.contains({c, i})) w.push_back({true, {c, i}});
    if (t.contains({c, i + 1})) w.push_back({false, {c, i + 1}});
  }
  std::vector<Cell> low, high;
  for (const Letter& l : cancel(w)) (l.open ? low : high).push_back(l.cell);
  const RowPairing p = row_pairing(t, i);
  CHECK(p.unpaired_low == low);
  CHECK(p.unpaired_high == high);
}

void check_column_pairing(const Diagram& t, int c) {
  std::vector<Letter> w;
  for (int r = t.max_row(); r >= 1; --r) {
    if (t.contains({c, r})) w.push_back({true, {c, r}});
    if (t.contains({c + 1, r})) w.push_back({false, {c + 1, r}});
  }
  std::vector<Cell> left, right;
  for (const Letter& l : cancel(w)) (l.open ? left : right).push_back(l.cell);
  const ColumnPairing p = column_pairing(t, c);
  CHECK(p.unpaired_left == left);
  CHECK(p.unpaired_right == right);
}

Diagram reflect(const Diagram& t, int m) {
  std::vector<Cell> cells;
  for (const Cell& x : t.cells()) cells.push_back({m + 1 - x.row, x.col});
  return Diagram(std::move(cells));
}

}  // namespace

TEST_CASE("pairings agree with parenthesis cancellation") {
  for (const Diagram& t : southwest_diagrams_in_box(3, 3, 9)) {
    for (int i = 1; i <= 2; ++i) check_row_pairing(t, i);
    for (int c = 1; c <= 2; ++c) check_column_pairing(t, c);
  }
  // Also on a diagram that is not southwest.
  const Diagram t{{1, 3}, {2, 2}, {3, 2}, {3, 3}, {4, 1}};
  for (int i = 1; i <= 3; ++i) check_row_pairing(t, i);
  for (int c = 1; c <= 3; ++c) check_column_pairing(t, c);
}

TEST_CASE("raising and lowering are partial inverses") {
  const KohnertSet kd = generate_kd(testutil::data_grid("two_components.txt"));
  std::size_t raised = 0;
  for (const Diagram& t : kd.members)
    for (int i = 1; i <= 3; ++i) {
      if (auto s = raising(t, i)) {
        ++raised;
        CHECK(kd.contains(*s));
        CHECK(lowering(*s, i, kd) == t);
        CHECK(weight(*s)[i - 1] == weight(t)[i - 1] + 1);
      }
      if (auto s = lowering(t, i, kd)) CHECK(raising(*s, i) == t);
    }
  CHECK(raised > 0);
  CHECK_THROWS(lowering(Diagram{{7, 7}}, 1, kd));
}

TEST_CASE("rectification steps are raisings of the reflected diagram") {
  for (const Diagram& t : southwest_diagrams_in_box(3, 3, 9)) {
    const int m = t.max_row();
    for (int c = 1; c <= 2; ++c) {
      const auto up = raising(reflect(t, m), c);
      CHECK(reflect(rectify_step(t, c), m) == up.value_or(reflect(t, m)));
    }
  }
}

TEST_CASE("rectification") {
  const Diagram t{{2, 1}, {3, 2}};
  CHECK_FALSE(is_rectified(t));
  const Diagram r = rectify(t);
  CHECK(is_rectified(r));
  CHECK(r == Diagram{{1, 1}, {1, 2}});
  CHECK(is_rectified(composition_diagram({3, 0, 2})));
  CHECK(rectify_column(Diagram{{2, 1}, {2, 2}}, 1) == Diagram{{1, 1}, {1, 2}});
}

TEST_CASE("rectification does not depend on the column order") {
  std::mt19937_64 rng(5);
  for (const Diagram& t : southwest_diagrams_in_box(4, 3, 6)) {
    const Diagram r = rectify(t);
    for (int k = 0; k < 3; ++k) CHECK(rectify_random_order(t, rng) == r);
  }
  const KohnertSet kd = generate_kd(testutil::data_grid("labeling_source.txt"));
  for (std::size_t k = 0; k < kd.size(); k += 97)
    CHECK(rectify_random_order(kd.members[k], rng) == rectify(kd.members[k]));
}

TEST_CASE("crystal graph of the two-component example") {
  const Diagram d = testutil::data_grid("two_components.txt");
  const CrystalGraph g = crystal_graph(generate_kd(d));
  REQUIRE(g.components.size() == 2);
  std::vector<std::size_t> sizes;
  for (const auto& c : g.components) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{9, 10});
  for (const auto& hw : g.highest_weights) CHECK(hw.size() == 1);
  CHECK(g.escaping.empty());
  for (const CrystalEdge& e : g.edges) CHECK(g.component_of[e.from] == g.component_of[e.to]);

  const std::string dot = crystal_to_dot(g, {"first", "second"});
  CHECK(dot.rfind("digraph crystal {", 0) == 0);
  CHECK(dot.find("label=\"component 1: second\"") != std::string::npos);
  const auto j = nlohmann::json::parse(crystal_components_json(g));
  CHECK(j.size() == 2);
  CHECK(j[0]["size"].get<int>() + j[1]["size"].get<int>() == 19);
}

TEST_CASE("non-southwest sources") {
  const Diagram d{{1, 2}, {2, 2}, {2, 1}};
  const KohnertSet kd = generate_kd(d);
  CHECK_THROWS_AS(crystal_graph(kd), NotSouthwest);
  const CrystalGraph g = crystal_graph(kd, true);
  CHECK(g.nodes.size() == kd.size());
  CHECK_FALSE(g.escaping.empty());
  CHECK(crystal_to_dot(g).find("style=dashed") != std::string::npos);
}
