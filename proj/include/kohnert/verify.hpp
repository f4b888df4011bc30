// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_VERIFY_HPP
#define KOHNERT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kohnert/diagram.hpp"

namespace kohnert {

struct VerifyOptions {
  int jobs = 1;
  int max_parts = 4;  // kohnert-vs-pi
  int max_size = 6;
  std::vector<int> schubert_n = {4, 5};
  int closure_box = 4;  // closure
  int closure_cells = 6;
  int commute_samples = 1000;  // commute
  int commute_box = 5;
  std::uint64_t seed = 20260101;
  int membership_box = 3;  // D in box x box, T in box x (box+1)
  int family_box = 3;      // crystal-iso, yamanouchi, slide, vexillary
  int psi_parts = 4;       // psi
  int psi_size = 5;
  int algebra_samples = 200;  // algebra
  std::size_t max_counterexamples = 5;
};

struct SuiteReport {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
  double seconds = 0;
};

// Suite names in acceptance order.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

// Runs check(k) for k in [0, count) on up to `jobs` threads. A returned
// string is a failure description.
struct SweepResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
};
SweepResult parallel_sweep(std::size_t count, int jobs, std::size_t max_counterexamples,
                           const std::function<std::optional<std::string>(std::size_t)>& check);

// Enumeration helpers shared with the tests.
std::vector<Diagram> southwest_diagrams_in_box(int cols, int rows, int max_cells);
std::vector<Diagram> diagrams_with_column_weights(const std::vector<int>& weights, int rows);
std::vector<Composition> weak_compositions(int parts, int max_size);

}  // namespace kohnert

#endif  // KOHNERT_VERIFY_HPP
