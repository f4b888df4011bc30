// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "kohnert/diagram.hpp"
#include "test_util.hpp"

using namespace kohnert;

TEST_CASE("cells are kept sorted and duplicates rejected") {
  const Diagram d{{2, 1}, {1, 3}, {1, 1}};
  CHECK(d.cells().front() == Cell{1, 1});
  CHECK(d.size() == 3);
  CHECK(d.contains({1, 3}));
  CHECK_FALSE(d.contains({2, 2}));
  CHECK_THROWS_AS(Diagram({{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({{0, 1}}), std::invalid_argument);
}

TEST_CASE("grid round trip") {
  const std::string text = "..O\nO..\nOOO\n...\n";
  const Diagram d = parse_grid(text);
  CHECK(d == Diagram{{3, 4}, {1, 3}, {1, 2}, {2, 2}, {3, 2}});
  CHECK(format_grid(d) == text);
  CHECK(parse_grid(format_grid(d)) == d);
  CHECK(parse_grid("# comment\nO\n") == Diagram{{1, 1}});
  CHECK(format_grid(Diagram{}).empty());
}

TEST_CASE("grid parse errors carry line and column") {
  try {
    parse_grid("O.\n.X\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 2);
  }
}

TEST_CASE("weight and column weights") {
  const Diagram d = testutil::data_grid("two_components.txt");
  CHECK(weight(d) == Composition{0, 3, 1, 1});
  CHECK(d.column_weights() == std::vector<int>{2, 1, 2});
  CHECK(d.max_row() == 4);
  CHECK(d.max_col() == 3);
  CHECK(weight(Diagram{}).empty());
}

TEST_CASE("composition diagrams") {
  CHECK(composition_diagram({0, 2}) == Diagram{{1, 2}, {2, 2}});
  CHECK(composition_diagram({}).empty());
  CHECK(weight(composition_diagram({2, 0, 3})) == Composition{2, 0, 3});
}

TEST_CASE("Rothe diagram of 13625847") {
  const Permutation w{1, 3, 6, 2, 5, 8, 4, 7};
  const Diagram d = rothe_diagram(w);
  CHECK(weight(d) == Composition{0, 1, 3, 0, 1, 2});
  CHECK(lehmer_code(w) == Composition{0, 1, 3, 0, 1, 2, 0, 0});
  // Column 1 is empty; shifting left removes it.
  CHECK(d.rows_in_column(1).empty());
  CHECK(shifted(d, -1, 0) ==
        Diagram{{3, 6}, {6, 6}, {3, 5}, {1, 3}, {3, 3}, {4, 3}, {1, 2}});
  CHECK(is_southwest(d));
}

TEST_CASE("Rothe diagram weight is the Lehmer code") {
  for (const Permutation& w : {Permutation{2, 1}, Permutation{3, 1, 2}, Permutation{2, 1, 4, 3},
                               Permutation{4, 3, 2, 1}}) {
    CHECK(padded(weight(rothe_diagram(w)), w.size()) == lehmer_code(w));
  }
  CHECK(rothe_diagram({1, 2, 3}).empty());
}

TEST_CASE("southwest condition") {
  CHECK(is_southwest(testutil::data_grid("two_components.txt")));
  CHECK(is_southwest(testutil::data_grid("labeling_source.txt")));
  // (1,2) and (2,1) form a northwest/southeast pair without (1,1).
  CHECK_FALSE(is_southwest(Diagram{{1, 2}, {2, 1}}));
  CHECK(is_southwest(Diagram{{1, 2}, {2, 1}, {1, 1}}));
  CHECK(is_southwest(Diagram{}));
}

TEST_CASE("sorting a composition records the shortest permutation") {
  auto [lambda, w] = sort_and_minimal_perm({0, 3, 2});
  CHECK(lambda == Composition{3, 2, 0});
  CHECK(w == Permutation{3, 1, 2});
  std::tie(lambda, w) = sort_and_minimal_perm({0, 3, 1, 1});
  CHECK(lambda == Composition{3, 1, 1, 0});
  CHECK(w == Permutation{4, 1, 2, 3});
  std::tie(lambda, w) = sort_and_minimal_perm({2, 2, 0});
  CHECK(w == Permutation{1, 2, 3});
}

TEST_CASE("padding and trimming") {
  CHECK(padded({1, 2}, 4) == Composition{1, 2, 0, 0});
  CHECK(trimmed({1, 0, 2, 0, 0}) == Composition{1, 0, 2});
  CHECK(trimmed({0, 0}).empty());
}

TEST_CASE("integer lists and formatting") {
  CHECK(parse_int_list("0, 3,2") == Composition{0, 3, 2});
  CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_int_list("1,a"), ParseError);
  CHECK(format_composition({3, 2, 0}) == "(3,2,0)");
  CHECK(format_permutation({4, 1, 2, 3}) == "4123");
  CHECK(format_permutation({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) == "1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("moving and editing cells") {
  const Diagram d{{1, 1}, {1, 3}};
  CHECK(d.moved({1, 3}, {1, 2}) == Diagram{{1, 1}, {1, 2}});
  CHECK_THROWS(d.moved({1, 3}, {1, 1}));
  CHECK(d.inserted({2, 1}).size() == 3);
  CHECK(d.erased({1, 1}) == Diagram{{1, 3}});
  CHECK(DiagramHash{}(d) == DiagramHash{}(Diagram{{1, 3}, {1, 1}}));
}
