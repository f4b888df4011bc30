// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "kohnert/kohnert_set.hpp"
#include "kohnert/permutation.hpp"
#include "test_util.hpp"

using namespace kohnert;

namespace {

std::size_t oracle_count(const std::string& key) {
  return testutil::oracle()["kd_count"][key].get<std::size_t>();
}

}  // namespace

TEST_CASE("single Kohnert moves") {
  // The rightmost cell of row 2 drops to the first free row below it.
  CHECK(kohnert_move(Diagram{{1, 2}, {2, 2}}, 2) == Diagram{{1, 2}, {2, 1}});
  // No free position below the rightmost cell.
  CHECK_FALSE(kohnert_move(Diagram{{1, 2}, {2, 2}, {2, 1}}, 2).has_value());
  // Jumps over occupied cells.
  CHECK(kohnert_move(Diagram{{1, 3}, {1, 2}}, 3) == Diagram{{1, 1}, {1, 2}});
  CHECK_FALSE(kohnert_move(Diagram{{1, 1}}, 1).has_value());
  CHECK_FALSE(kohnert_move(Diagram{{1, 2}, {1, 1}}, 2).has_value());
  CHECK_FALSE(kohnert_move(Diagram{{1, 1}}, 5).has_value());
}

TEST_CASE("closure sizes match the oracle") {
  CHECK(generate_kd(composition_diagram({0, 2})).size() == oracle_count("comp_0_2"));
  CHECK(generate_kd(composition_diagram({0, 3, 2})).size() == oracle_count("comp_0_3_2"));
  CHECK(generate_kd(composition_diagram({2, 0, 2, 1})).size() == oracle_count("comp_2_0_2_1"));
  CHECK(generate_kd(rothe_diagram({2, 1, 4, 3})).size() == oracle_count("rothe_2143"));
  CHECK(generate_kd(rothe_diagram({1, 3, 6, 2, 5, 8, 4, 7})).size() ==
        oracle_count("rothe_13625847"));
  CHECK(generate_kd(Diagram{{1, 1}}).size() == oracle_count("single"));
  CHECK(generate_kd(testutil::data_grid("two_components.txt")).size() ==
        oracle_count("two_components"));
}

TEST_CASE("closure structure") {
  const Diagram d = testutil::data_grid("two_components.txt");
  const KohnertSet kd = generate_kd(d);
  CHECK(kd.members.front() == d);
  CHECK(kd.id(d) == 0);
  CHECK(kd.contains(d));
  for (const MoveEdge& e : kd.edges) CHECK(kohnert_move(kd.members[e.from], e.row) == kd.members[e.to]);
  std::set<std::size_t> reached{0};
  for (const MoveEdge& e : kd.edges) reached.insert(e.to);
  CHECK(reached.size() == kd.size());
  // Kohnert moves preserve column weights.
  for (const Diagram& t : kd.members) CHECK(t.column_weights() == d.column_weights());
  CHECK_THROWS(kd.id(Diagram{{9, 9}}));
}

TEST_CASE("reverse moves") {
  const auto pre = reverse_kohnert_moves(Diagram{{1, 1}}, 2);
  REQUIRE(pre.size() == 1);
  CHECK(pre.front().first == Diagram{{1, 2}});
  CHECK(pre.front().second == 2);
  // Unbounded lifts of every member reproduce an edge into it.
  const KohnertSet kd = generate_kd(composition_diagram({0, 3, 2}));
  for (const Diagram& t : kd.members)
    for (const auto& [s, r] : reverse_kohnert_moves(t, 3)) CHECK(kohnert_move(s, r) == t);
}

TEST_CASE("member bound") {
  const Diagram d = rothe_diagram({1, 3, 6, 2, 5, 8, 4, 7});
  CHECK_THROWS_AS(generate_kd(d, 10), ResourceLimit);
  CHECK(generate_kd(d, 594).size() == 594);
  CHECK(default_member_bound() > 0);
}

TEST_CASE("Kohnert polynomial of a composition diagram is a key polynomial") {
  for (const Composition& a : {Composition{0, 2}, Composition{1, 0, 2}, Composition{0, 3, 1, 1}})
    CHECK(same_polynomial(kohnert_polynomial(composition_diagram(a)), demazure_character(a)));
}

TEST_CASE("DOT and JSON output") {
  const KohnertSet kd = generate_kd(composition_diagram({0, 2}));
  const std::string dot = kd_to_dot(kd);
  CHECK(dot.rfind("digraph kohnert {", 0) == 0);
  CHECK(dot.find("[label=\"row=2\"]") != std::string::npos);
  CHECK(dot_node_name(Diagram{{1, 2}}) == "\"O\\n.\\n\"");
  const auto j = nlohmann::json::parse(kd_to_json(kd));
  CHECK(j["count"] == 3);
  CHECK(j["members"].size() == 3);
  CHECK(j["members"][0]["weight"] == std::vector<int>{0, 2});
  CHECK(j["source"] == "OO\n..\n");
}
