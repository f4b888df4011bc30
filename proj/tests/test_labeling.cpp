// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "kohnert/crystal.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/verify.hpp"
#include "test_util.hpp"

using namespace kohnert;

namespace {

// Some column c with relabel_rectify(a, c) == b, if any.
std::optional<int> relabel_column(const Labeling& a, const Labeling& b, SwapRule rule) {
  const int cols = std::max(a.base().max_col(), 1);
  for (int c = 1; c < cols; ++c)
    if (relabel_rectify(a, c, rule) == b) return c;
  return std::nullopt;
}

}  // namespace

TEST_CASE("labeled grid text") {
  const Labeling l = parse_labeled_grid("[12].\n.3\n# note\n21\n");
  CHECK(l.at({1, 3}) == 12);
  CHECK(l.at({2, 2}) == 3);
  CHECK(l.at({1, 1}) == 2);
  CHECK(l.size() == 4);
  CHECK(parse_labeled_grid(format_labeled_grid(l)) == l);
  CHECK(format_labeled_grid(l).find("[12]") != std::string::npos);
  try {
    parse_labeled_grid("1.\n.[4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_labeled_grid("0\n"), ParseError);
  CHECK_THROWS(l.at({5, 5}));
}

TEST_CASE("basic labeling properties") {
  const Diagram d = testutil::data_grid("labeling_source.txt");
  const Labeling s = super_standard(d);
  CHECK(s.base() == d);
  CHECK(is_flagged(s));
  CHECK(is_strict(s));
  CHECK(labeling_diagram(s) == d);
  for (const auto& [x, v] : s.labels) CHECK(v == x.row);
  const Labeling bad = parse_labeled_grid("1\n1\n");
  CHECK_FALSE(is_strict(bad));
  CHECK_FALSE(is_flagged(bad));
  CHECK_THROWS(labeling_diagram(bad));
  CHECK(shifted(s, 2).base() == kohnert::shifted(d, 2, 0));
}

TEST_CASE("Kohnert labeling of the general example") {
  const Diagram d = testutil::data_grid("labeling_source.txt");
  const Labeling want = testutil::data_labeling("labeling_general.lab");
  REQUIRE(generate_kd(d).contains(want.base()));
  const LabelingResult res = kohnert_labeling(want.base(), d);
  REQUIRE(res.defined());
  CHECK(res.labeling == want);
  CHECK(is_flagged(res.labeling));
  CHECK(is_strict(res.labeling));
  CHECK(kohnert_labeling(d, d).labeling == super_standard(d));
}

TEST_CASE("rectified labeling is a Kohnert tableau") {
  const Labeling l = testutil::data_labeling("labeling_general.lab");
  const Labeling want = testutil::data_labeling("kohnert_tableau.lab");
  const Labeling r = rect_labeling(l);
  CHECK(r == want);
  CHECK(is_rectified(r.base()));
  CHECK(is_kohnert_tableau(r, {0, 5, 0, 6, 3}));
  CHECK_FALSE(is_kohnert_tableau(r, {0, 5, 0, 6, 4}));
  CHECK_FALSE(is_kohnert_tableau(l, {0, 5, 0, 6, 3}));
}

TEST_CASE("relabeling steps") {
  const auto steps = testutil::data_labeling_sequence("relabel_steps.lab");
  REQUIRE(steps.size() >= 2);
  CHECK(steps.front() == testutil::data_labeling("labeling_general.lab"));
  CHECK(steps.back() == testutil::data_labeling("kohnert_tableau.lab"));
  const Labeling rect = rect_labeling(steps.front());
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    CAPTURE(k);
    CHECK(relabel_column(steps[k], steps[k + 1], SwapRule::iterated).has_value());
  }
  // A single exchange per cell does not reproduce the sequence.
  bool single_ok = true;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k)
    if (!relabel_column(steps[k], steps[k + 1], SwapRule::single)) single_ok = false;
  CHECK_FALSE(single_ok);
  CHECK(rect_labeling(steps.front(), SwapRule::single) != rect);
}

TEST_CASE("label pairing agrees with column pairing") {
  // On flagged strict labelings drawn from the super-standard labeling.
  for (const Diagram& d : southwest_diagrams_in_box(3, 3, 9)) {
    const Labeling s = super_standard(d);
    for (int c = 1; c < 3; ++c) {
      const LabelPairing lp = label_pairing(s, c);
      const ColumnPairing cp = column_pairing(d, c);
      CHECK(lp.unpaired == cp.unpaired_right);
    }
  }
}

TEST_CASE("rectified labelings stay flagged") {
  const KohnertSet kd = generate_kd(testutil::data_grid("labeling_source.txt"));
  const Diagram d = kd.source;
  for (std::size_t k = 0; k < kd.size(); k += 53) {
    const LabelingResult res = kohnert_labeling(kd.members[k], d);
    REQUIRE(res.defined());
    const Labeling r = rect_labeling(res.labeling);
    CHECK(is_flagged(r));
    CHECK(is_rectified(r.base()));
    CHECK(r.size() == res.labeling.size());
    CHECK(r.base().column_weights().size() <= d.column_weights().size());
  }
}

TEST_CASE("rectified labelings of members are Kohnert tableaux") {
  const Diagram d = testutil::data_grid("two_components.txt");
  const KohnertSet kd = generate_kd(d);
  for (const Diagram& t : kd.members) {
    const LabelingResult res = kohnert_labeling(t, d);
    REQUIRE(res.defined());
    const Labeling r = rect_labeling(res.labeling);
    CHECK(is_kohnert_tableau(r, weight(labeling_diagram(r))));
  }
}

TEST_CASE("labels are constant on crystal components") {
  // The label content of the rectified labeling is constant on each component.
  const Diagram d = testutil::data_grid("two_components.txt");
  const KohnertSet kd = generate_kd(d);
  const CrystalGraph g = crystal_graph(kd);
  for (const auto& comp : g.components) {
    const Diagram top = g.nodes[g.highest_weights[&comp - g.components.data()].front()];
    const Diagram key = labeling_diagram(rect_labeling(kohnert_labeling(top, d).labeling));
    for (std::size_t v : comp)
      CHECK(labeling_diagram(rect_labeling(kohnert_labeling(g.nodes[v], d).labeling)) == key);
  }
}

TEST_CASE("membership") {
  const Diagram d = testutil::data_grid("labeling_source.txt");
  const KohnertSet kd = generate_kd(d);
  CHECK(membership(d, d));
  CHECK(membership(testutil::data_labeling("labeling_general.lab").base(), d));
  for (std::size_t k = 0; k < kd.size(); k += 31) CHECK(membership(kd.members[k], d));
  // Same column weights, not reachable: a cell above the source.
  const Diagram up = d.moved(Cell{1, 2}, Cell{1, 7});
  CHECK_FALSE(kd.contains(up));
  CHECK_FALSE(membership(up, d));
  const LabelingResult diff = kohnert_labeling(Diagram{{1, 1}}, d);
  CHECK(diff.status == LabelingStatus::column_weights_differ);
  CHECK(diff.reason() == "column weights differ");
  CHECK_FALSE(membership(Diagram{{1, 1}}, d));
  CHECK_THROWS_AS(membership(Diagram{{1, 1}}, Diagram{{1, 2}, {2, 1}}), NotSouthwest);
}

TEST_CASE("membership agrees with the closure on a mutated diagram") {
  const Diagram d = testutil::data_grid("two_components.txt");
  const KohnertSet kd = generate_kd(d);
  for (const Diagram& t : southwest_diagrams_in_box(3, 4, 5))
    if (t.column_weights() == d.column_weights()) CHECK(membership(t, d) == kd.contains(t));
}

TEST_CASE("Yamanouchi diagrams") {
  const Diagram d = testutil::data_grid("labeling_source.txt");
  const Labeling y = testutil::data_labeling("yamanouchi.lab");
  const LabelingResult res = kohnert_labeling(y.base(), d);
  REQUIRE(res.defined());
  CHECK(res.labeling == y);
  CHECK(is_yamanouchi(y.base(), d));
  CHECK(weight(rect_labeling(y).base()) == Composition{0, 5, 0, 6, 3});
  CHECK_FALSE(is_yamanouchi(testutil::data_labeling("labeling_general.lab").base(), d));

  const Diagram two = testutil::data_grid("two_components.txt");
  CHECK(demazure_expansion(two) == std::vector<Composition>{{0, 3, 1, 1}, {0, 3, 2}});
  CHECK(yamanouchi_diagrams(two).size() == 2);
  CHECK(demazure_expansion(composition_diagram({2, 0, 1})) == std::vector<Composition>{{2, 0, 1}});
}

TEST_CASE("quasi-Yamanouchi diagrams") {
  CHECK(slide_expansion(composition_diagram({0, 2})) == std::vector<Composition>{{0, 2}});
  CHECK(slide_expansion(Diagram{{1, 1}}) == std::vector<Composition>{{1}});
  const Diagram two = testutil::data_grid("two_components.txt");
  const KohnertSet kd = generate_kd(two);
  for (const Diagram& t : kd.members)
    CHECK(is_quasi_yamanouchi(t, two) == is_quasi_yamanouchi_by_lifting(t, kd));
  Polynomial sum(4);
  for (const Composition& b : slide_expansion(two)) sum = sum + fundamental_slide(padded(b, 4), 4);
  CHECK(same_polynomial(sum, kohnert_polynomial(kd)));
}

TEST_CASE("vexillary diagrams") {
  CHECK(is_vexillary_diagram(composition_diagram({0, 3, 2})));
  CHECK_FALSE(is_vexillary_diagram(testutil::data_grid("two_components.txt")));
  const VexillaryCheck v = vexillary_theorem_check(testutil::data_grid("two_components.txt"));
  CHECK_FALSE(v.single_term);
  CHECK(v.consistent());
}

TEST_CASE("nested column swap") {
  const Diagram d{{2, 1}, {2, 2}, {1, 1}};
  const auto s = column_swap(d, 1);
  REQUIRE(s.has_value());
  CHECK(*s == Diagram{{1, 1}, {1, 2}, {2, 1}});
  CHECK(kohnert_polynomial(*s) == kohnert_polynomial(d));
  CHECK_FALSE(column_swap(Diagram{{1, 2}, {2, 1}}, 1).has_value());
}

TEST_CASE("Demazure data of crystal components") {
  const Diagram d = testutil::data_grid("two_components.txt");
  const CrystalGraph g = crystal_graph(generate_kd(d));
  std::vector<Composition> got;
  for (const auto& comp : g.components) {
    std::vector<Diagram> nodes;
    for (std::size_t v : comp) nodes.push_back(g.nodes[v]);
    const ComponentData cd = component_demazure_data(nodes, d);
    CHECK(std::is_sorted(cd.lambda.rbegin(), cd.lambda.rend()));
    got.push_back(cd.a);
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Composition>{{0, 3, 1, 1}, {0, 3, 2}});
}
