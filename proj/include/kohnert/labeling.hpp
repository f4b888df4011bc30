// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_LABELING_HPP
#define KOHNERT_LABELING_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/kohnert_set.hpp"
#include "kohnert/permutation.hpp"

namespace kohnert {

// Positive integer label on every cell of a diagram.
struct Labeling {
  std::map<Cell, int> labels;

  Diagram base() const;
  int at(Cell x) const;
  std::size_t size() const { return labels.size(); }
  bool operator==(const Labeling&) const = default;
};

Labeling super_standard(const Diagram& d);
bool is_flagged(const Labeling& l);
bool is_strict(const Labeling& l);  // labels distinct within each column
// Cell (c, r) iff column c carries label r. Throws on non-strict input.
Diagram labeling_diagram(const Labeling& l);
Labeling shifted(const Labeling& l, int dc);

// Grid text with a label digit, or a bracketed number such as [12], in place
// of 'O'.
Labeling parse_labeled_grid(std::string_view text);
std::string format_labeled_grid(const Labeling& l);

struct LabelPairing {
  int c = 1;
  std::map<Cell, Cell> partner;  // column c+1 cell -> column c cell
  std::vector<Cell> unpaired;    // column c+1, highest first
};

LabelPairing label_pairing(const Labeling& l, int c);

enum class SwapRule {
  iterated,  // keep swapping x_i while a candidate z exists
  single,    // at most one swap per unpaired cell
};

// Relabels by the label pairing at column c, then moves the column-unpaired
// cells of column c+1 into column c, carrying their labels.
Labeling relabel_rectify(const Labeling& l, int c, SwapRule rule = SwapRule::iterated);

// Right-to-left passes of relabel_rectify until the diagram is rectified and
// a full pass leaves the labeling unchanged.
Labeling rect_labeling(const Labeling& l, SwapRule rule = SwapRule::iterated);

bool is_kohnert_tableau(const Labeling& l, const Composition& a);

enum class LabelingStatus { ok, column_weights_differ, not_well_defined };

struct LabelingResult {
  LabelingStatus status = LabelingStatus::ok;
  Labeling labeling;  // partial when not well-defined
  int failed_column = 0;
  int failed_label = 0;

  bool defined() const { return status == LabelingStatus::ok; }
  std::string reason() const;
};

// L_D(T).
LabelingResult kohnert_labeling(const Diagram& t, const Diagram& d);

// Labeling test for T in KD(D); D must be southwest.
bool membership(const Diagram& t, const Diagram& d);

// Y in KD(D) whose rectified labeling is super-standard on a composition
// diagram. Throws if Y is not a member.
bool is_yamanouchi(const Diagram& y, const Diagram& d);
std::vector<Diagram> yamanouchi_diagrams(const Diagram& d);
// Sorted weights of the Yamanouchi diagrams, trailing zeros removed.
std::vector<Composition> demazure_expansion(const Diagram& d);

// Labeling criterion for quasi-Yamanouchi members. Throws on non-members.
bool is_quasi_yamanouchi(const Diagram& t, const Diagram& d);
// Lifting criterion evaluated directly against the closure kd.
bool is_quasi_yamanouchi_by_lifting(const Diagram& t, const KohnertSet& kd);
std::vector<Diagram> quasi_yamanouchi_diagrams(const Diagram& d);
std::vector<Composition> slide_expansion(const Diagram& d);

bool is_vexillary_diagram(const Diagram& d);

struct VexillaryCheck {
  bool single_term = false;
  bool vexillary = false;
  bool consistent() const { return single_term == vexillary; }
};
VexillaryCheck vexillary_theorem_check(const Diagram& d);

// Exchanges columns c and c+1 when their row sets are nested.
std::optional<Diagram> column_swap(const Diagram& d, int c);

struct ComponentData {
  Composition lambda;  // length of a
  Permutation w;
  Composition a;  // trailing zeros removed
};

// Data of the Demazure crystal matching one crystal component of KD(D).
ComponentData component_demazure_data(const std::vector<Diagram>& component, const Diagram& d);

}  // namespace kohnert

#endif  // KOHNERT_LABELING_HPP
