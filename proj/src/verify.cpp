// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kohnert/crystal.hpp"
#include "kohnert/kohnert_set.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/permutation.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/tableaux.hpp"

namespace kohnert {

SweepResult parallel_sweep(std::size_t count, int jobs, std::size_t max_counterexamples,
                           const std::function<std::optional<std::string>(std::size_t)>& check) {
  SweepResult res;
  res.cases = count;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::vector<std::pair<std::size_t, std::string>> found;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      std::optional<std::string> bad;
      try {
        bad = check(k);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        std::lock_guard<std::mutex> lock(mu);
        found.emplace_back(k, std::move(*bad));
      }
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // Case order keeps the report independent of scheduling.
  std::sort(found.begin(), found.end());
  res.failures = found.size();
  for (std::size_t k = 0; k < found.size() && k < max_counterexamples; ++k)
    res.counterexamples.push_back(std::move(found[k].second));
  return res;
}

std::vector<Diagram> southwest_diagrams_in_box(int cols, int rows, int max_cells) {
  const int n = cols * rows;
  if (n > 24) throw std::invalid_argument("box too large to enumerate");
  std::vector<Diagram> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > max_cells) continue;
    std::vector<Cell> cells;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) cells.push_back({k / rows + 1, k % rows + 1});
    Diagram d(std::move(cells));
    if (is_southwest(d)) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> diagrams_with_column_weights(const std::vector<int>& weights, int rows) {
  std::vector<Diagram> out;
  std::vector<Cell> cells;
  std::function<void(std::size_t)> by_column = [&](std::size_t c) {
    if (c == weights.size()) {
      out.emplace_back(cells);
      return;
    }
    std::function<void(int, int)> choose = [&](int from, int left) {
      if (left == 0) {
        by_column(c + 1);
        return;
      }
      for (int r = from; r + left - 1 <= rows; ++r) {
        cells.push_back({static_cast<int>(c) + 1, r});
        choose(r + 1, left - 1);
        cells.pop_back();
      }
    };
    choose(1, weights[c]);
  };
  by_column(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> weak_compositions(int parts, int max_size) {
  std::vector<Composition> out;
  Composition a(parts, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == parts) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, max_size);
  return out;
}

namespace {

std::string grid_inline(const Diagram& d) {
  std::string g = format_grid(d);
  for (char& ch : g)
    if (ch == '\n') ch = '/';
  if (!g.empty()) g.pop_back();
  return g.empty() ? "(empty)" : g;
}

SuiteReport from_sweep(const std::string& name, SweepResult sweep) {
  SuiteReport r;
  r.name = name;
  r.cases = sweep.cases;
  r.failures = sweep.failures;
  r.counterexamples = std::move(sweep.counterexamples);
  r.passed = r.failures == 0 && r.cases > 0;
  return r;
}

Permutation schubert_word_target(const Permutation& w) {
  return compose(inverse(w), longest_permutation(static_cast<int>(w.size())));
}

// Criterion 1.
SuiteReport suite_kohnert_vs_pi(const VerifyOptions& o) {
  const auto comps = weak_compositions(o.max_parts, o.max_size);
  return from_sweep("kohnert-vs-pi",
                    parallel_sweep(comps.size(), o.jobs, o.max_counterexamples,
                                   [&](std::size_t k) -> std::optional<std::string> {
                                     const Composition& a = comps[k];
                                     const Polynomial lhs = kohnert_polynomial(composition_diagram(a));
                                     const Polynomial rhs = demazure_character(a, o.max_parts);
                                     if (same_polynomial(lhs, rhs)) return std::nullopt;
                                     return "a=" + format_composition(a) + " Kohnert " +
                                            to_string(lhs) + " vs pi " + to_string(rhs);
                                   }));
}

// Criterion 2.
SuiteReport suite_schubert(const VerifyOptions& o) {
  std::vector<Permutation> perms;
  for (int n : o.schubert_n)
    for (auto& w : all_permutations(n)) perms.push_back(w);
  return from_sweep("schubert",
                    parallel_sweep(perms.size(), o.jobs, o.max_counterexamples,
                                   [&](std::size_t k) -> std::optional<std::string> {
                                     const Permutation& w = perms[k];
                                     const Polynomial lhs = kohnert_polynomial(rothe_diagram(w));
                                     const Polynomial rhs = schubert_polynomial(w);
                                     if (same_polynomial(lhs, rhs)) return std::nullopt;
                                     return "w=" + format_permutation(w) + " Kohnert " +
                                            to_string(lhs) + " vs divided differences " +
                                            to_string(rhs);
                                   }));
}

// Criterion 3.
SuiteReport suite_two_components(const VerifyOptions&) {
  SuiteReport r;
  r.name = "two-components";
  auto fail = [&r](std::string msg) {
    ++r.failures;
    r.counterexamples.push_back(std::move(msg));
  };
  const Diagram d{{3, 4}, {1, 3}, {1, 2}, {2, 2}, {3, 2}};
  const KohnertSet kd = generate_kd(d);
  ++r.cases;
  if (kd.size() != 19) fail("|KD(D)| = " + std::to_string(kd.size()) + ", expected 19");
  ++r.cases;
  const Polynomial expected = sum_of_basis({{0, 3, 2, 0}, {0, 3, 1, 1}}, Basis::key, 4);
  if (!same_polynomial(kohnert_polynomial(kd), expected))
    fail("Kohnert polynomial differs from the two-term key sum");
  ++r.cases;
  const auto exp = demazure_expansion(d);
  if (exp != std::vector<Composition>{{0, 3, 1, 1}, {0, 3, 2}})
    fail("Yamanouchi expansion has " + std::to_string(exp.size()) + " terms");
  const CrystalGraph g = crystal_graph(kd);
  std::map<std::size_t, std::string> data;
  for (const auto& comp : g.components) {
    std::vector<Diagram> nodes;
    for (std::size_t v : comp) nodes.push_back(g.nodes[v]);
    const ComponentData cd = component_demazure_data(nodes, d);
    data[comp.size()] = format_composition(cd.lambda) + " " + format_permutation(cd.w) + " " +
                        format_composition(cd.a);
  }
  ++r.cases;
  const std::map<std::size_t, std::string> want{{9, "(3,2,0) 312 (0,3,2)"},
                                                {10, "(3,1,1,0) 4123 (0,3,1,1)"}};
  if (data != want) {
    std::ostringstream os;
    os << "components:";
    for (const auto& [size, text] : data) os << " [" << size << ": " << text << "]";
    fail(os.str());
  }
  r.passed = r.failures == 0;
  return r;
}

// Criterion 4.
SuiteReport suite_rothe(const VerifyOptions&) {
  SuiteReport r;
  r.name = "rothe-13625847";
  const Permutation w{1, 3, 6, 2, 5, 8, 4, 7};
  const Diagram d = rothe_diagram(w);
  const std::vector<Composition> want{{0, 1, 3, 0, 1, 2}, {0, 2, 3, 0, 0, 2}, {0, 3, 3, 0, 0, 1},
                                      {0, 1, 4, 0, 1, 1}, {0, 2, 4, 0, 0, 1}};
  std::vector<Composition> sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  ++r.cases;
  const auto got = demazure_expansion(d);
  if (got != sorted_want) {
    std::ostringstream os;
    os << "Yamanouchi weights:";
    for (const auto& a : got) os << ' ' << format_composition(a);
    r.counterexamples.push_back(os.str());
    ++r.failures;
  }
  ++r.cases;
  if (!same_polynomial(sum_of_basis(got, Basis::key, 8), schubert_polynomial(w))) {
    r.counterexamples.push_back("key sum differs from the divided-difference Schubert polynomial");
    ++r.failures;
  }
  r.passed = r.failures == 0;
  return r;
}

// Criterion 5.
SuiteReport suite_closure(const VerifyOptions& o) {
  const auto family = southwest_diagrams_in_box(o.closure_box, o.closure_box, o.closure_cells);
  return from_sweep("closure",
                    parallel_sweep(family.size(), o.jobs, o.max_counterexamples,
                                   [&](std::size_t k) -> std::optional<std::string> {
                                     const Diagram& d = family[k];
                                     const KohnertSet kd = generate_kd(d);
                                     for (const Diagram& t : kd.members)
                                       for (int i = 1; i <= d.max_row(); ++i) {
                                         auto img = raising(t, i);
                                         if (img && !kd.contains(*img))
                                           return "D=" + grid_inline(d) + " T=" + grid_inline(t) +
                                                  " e_" + std::to_string(i) + " escapes";
                                       }
                                     return std::nullopt;
                                   }));
}

// Criterion 6.
SuiteReport suite_commute(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::bernoulli_distribution coin(0.4);
  std::vector<Diagram> samples;
  while (static_cast<int>(samples.size()) < o.commute_samples) {
    std::vector<Cell> cells;
    for (int c = 1; c <= o.commute_box; ++c)
      for (int r = 1; r <= o.commute_box; ++r)
        if (coin(rng)) cells.push_back({c, r});
    if (!cells.empty()) samples.emplace_back(std::move(cells));
  }
  const int box = o.commute_box;
  return from_sweep(
      "commute", parallel_sweep(samples.size(), o.jobs, o.max_counterexamples,
                                [&](std::size_t k) -> std::optional<std::string> {
                                  const Diagram& t = samples[k];
                                  for (int r = 1; r <= box; ++r)
                                    for (int c = 1; c <= box; ++c) {
                                      const auto direct = raising(t, r);
                                      const auto after = raising(rectify_column(t, c), r);
                                      bool ok = direct.has_value() == after.has_value();
                                      if (ok && direct) ok = *after == rectify_column(*direct, c);
                                      if (!ok)
                                        return "T=" + grid_inline(t) + " r=" + std::to_string(r) +
                                               " c=" + std::to_string(c);
                                    }
                                  return std::nullopt;
                                }));
}

// Criterion 7.
SuiteReport suite_membership(const VerifyOptions& o) {
  const int box = o.membership_box;
  const auto family = southwest_diagrams_in_box(box, box, box * box);
  return from_sweep("membership",
                    parallel_sweep(family.size(), o.jobs, o.max_counterexamples,
                                   [&](std::size_t k) -> std::optional<std::string> {
                                     const Diagram& d = family[k];
                                     const KohnertSet kd = generate_kd(d);
                                     for (const Diagram& t :
                                          diagrams_with_column_weights(d.column_weights(), box + 1)) {
                                       if (membership(t, d) != kd.contains(t))
                                         return "D=" + grid_inline(d) + " T=" + grid_inline(t) +
                                                " labeling says " +
                                                (kd.contains(t) ? "no" : "yes");
                                     }
                                     return std::nullopt;
                                   }));
}

// Checks one component against B_w(lambda); returns a failure description.
std::optional<std::string> check_component(const CrystalGraph& g, const std::vector<std::size_t>& comp,
                                           const Diagram& d) {
  std::vector<Diagram> nodes;
  for (std::size_t v : comp) nodes.push_back(g.nodes[v]);
  const ComponentData cd = component_demazure_data(nodes, d);
  const int n = std::max(d.max_row(), static_cast<int>(cd.a.size()));
  const int top = std::max(1, n);
  const std::string where = "D=" + grid_inline(d) + " a=" + format_composition(cd.a);

  // rect onto KD(D(a)).
  const KohnertSet target = generate_kd(composition_diagram(cd.a));
  std::set<Diagram> images;
  for (const Diagram& t : nodes) {
    const Diagram rt = rectify(t);
    if (!target.contains(rt)) return where + " rect leaves KD(D(a)) at " + grid_inline(t);
    if (padded(weight(rt), top) != padded(weight(t), top)) return where + " rect changes weight";
    images.insert(rt);
    for (int i = 1; i <= top; ++i) {
      const auto up = raising(t, i);
      const auto up_rect = raising(rt, i);
      if (up.has_value() != up_rect.has_value() || (up && rectify(*up) != *up_rect))
        return where + " rect does not intertwine e_" + std::to_string(i) + " at " + grid_inline(t);
    }
  }
  if (images.size() != nodes.size() || images.size() != target.size())
    return where + " rect is not a bijection onto KD(D(a))";

  // Colored-graph isomorphism onto the tableau Demazure crystal.
  const std::set<Tableau> b = demazure_subset(padded(cd.lambda, n), extended(cd.w, n), n);
  std::map<std::size_t, std::map<int, std::size_t>> lower;  // lowering inside the component
  for (const CrystalEdge& e : g.edges) {
    if (g.component_of[e.from] != g.component_of[comp.front()]) continue;
    if (!lower[e.to].emplace(e.i, e.from).second) return where + " two lowering preimages";
  }
  std::map<std::size_t, Tableau> phi_map;
  std::map<Tableau, std::size_t> back;
  const std::size_t u = g.highest_weights[g.component_of[comp.front()]].front();
  phi_map.emplace(u, highest_weight_tableau(padded(cd.lambda, n)));
  back.emplace(phi_map.at(u), u);
  std::vector<std::size_t> queue{u};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    const Tableau tv = phi_map.at(v);
    for (int i = 1; i < n; ++i) {
      auto f = ssyt_lower(tv, i);
      if (f && !b.count(*f)) f.reset();
      auto it = lower[v].find(i);
      const bool has = it != lower[v].end();
      if (has != f.has_value()) return where + " lowering f_" + std::to_string(i) + " disagrees";
      if (!has) continue;
      auto [pos, fresh] = phi_map.emplace(it->second, *f);
      if (!fresh && pos->second != *f) return where + " inconsistent isomorphism";
      if (fresh) {
        if (!back.emplace(*f, it->second).second) return where + " isomorphism not injective";
        queue.push_back(it->second);
      }
    }
  }
  if (phi_map.size() != comp.size() || back.size() != b.size())
    return where + " component has " + std::to_string(comp.size()) + " nodes, B_w(lambda) has " +
           std::to_string(b.size());
  for (const auto& [v, tv] : phi_map) {
    if (tableau_weight(tv, n) != padded(weight(g.nodes[v]), n)) return where + " weight mismatch";
    for (int i = 1; i < n; ++i) {
      const auto e = ssyt_raise(tv, i);
      const std::size_t up = i <= g.max_index ? g.raise[v][i - 1] : CrystalGraph::npos;
      const bool has = up != CrystalGraph::npos;
      if (has != e.has_value()) return where + " raising e_" + std::to_string(i) + " disagrees";
      if (has && phi_map.at(up) != *e) return where + " isomorphism does not intertwine e_" +
                                                  std::to_string(i);
    }
  }
  return std::nullopt;
}

// Criterion 8.
SuiteReport suite_crystal_iso(const VerifyOptions& o) {
  const auto family = southwest_diagrams_in_box(o.family_box, o.family_box, o.family_box * o.family_box);
  return from_sweep("crystal-iso",
                    parallel_sweep(family.size(), o.jobs, o.max_counterexamples,
                                   [&](std::size_t k) -> std::optional<std::string> {
                                     const Diagram& d = family[k];
                                     const CrystalGraph g = crystal_graph(generate_kd(d));
                                     if (!g.escaping.empty()) return "D=" + grid_inline(d) + " escaping edge";
                                     for (const auto& comp : g.components)
                                       if (auto bad = check_component(g, comp, d)) return bad;
                                     return std::nullopt;
                                   }));
}

// Criterion 9.
SuiteReport suite_yamanouchi(const VerifyOptions& o) {
  const auto family = southwest_diagrams_in_box(o.family_box, o.family_box, o.family_box * o.family_box);
  return from_sweep(
      "yamanouchi",
      parallel_sweep(family.size(), o.jobs, o.max_counterexamples,
                     [&](std::size_t k) -> std::optional<std::string> {
                       const Diagram& d = family[k];
                       const KohnertSet kd = generate_kd(d);
                       const CrystalGraph g = crystal_graph(kd);
                       const auto yam = yamanouchi_diagrams(d);
                       if (yam.size() != g.components.size())
                         return "D=" + grid_inline(d) + " " + std::to_string(yam.size()) +
                                " Yamanouchi diagrams, " + std::to_string(g.components.size()) +
                                " components";
                       std::set<std::size_t> hit;
                       for (const Diagram& y : yam) hit.insert(g.component_of[g.index.at(y)]);
                       if (hit.size() != yam.size())
                         return "D=" + grid_inline(d) + " two Yamanouchi diagrams in one component";
                       std::vector<Composition> weights;
                       for (const Diagram& y : yam) weights.push_back(weight(y));
                       const int n = d.max_row();
                       if (!same_polynomial(sum_of_basis(weights, Basis::key, n), kohnert_polynomial(kd)))
                         return "D=" + grid_inline(d) + " key sum differs from the Kohnert polynomial";
                       return std::nullopt;
                     }));
}

// Criterion 10.
SuiteReport suite_slide(const VerifyOptions& o) {
  const auto family = southwest_diagrams_in_box(o.family_box, o.family_box, o.family_box * o.family_box);
  return from_sweep(
      "slide", parallel_sweep(family.size(), o.jobs, o.max_counterexamples,
                              [&](std::size_t k) -> std::optional<std::string> {
                                const Diagram& d = family[k];
                                const KohnertSet kd = generate_kd(d);
                                const auto qy = quasi_yamanouchi_diagrams(d);
                                const std::set<Diagram> qy_set(qy.begin(), qy.end());
                                for (const Diagram& t : kd.members)
                                  if (qy_set.count(t) != static_cast<std::size_t>(
                                                             is_quasi_yamanouchi_by_lifting(t, kd)))
                                    return "D=" + grid_inline(d) + " T=" + grid_inline(t) +
                                           " labeling and lifting criteria disagree";
                                for (const Diagram& y : yamanouchi_diagrams(d))
                                  if (!qy_set.count(y))
                                    return "D=" + grid_inline(d) + " Yamanouchi " + grid_inline(y) +
                                           " is not quasi-Yamanouchi";
                                std::vector<Composition> weights;
                                for (const Diagram& t : qy) weights.push_back(weight(t));
                                if (!same_polynomial(sum_of_basis(weights, Basis::slide, d.max_row()),
                                                     kohnert_polynomial(kd)))
                                  return "D=" + grid_inline(d) + " slide sum differs";
                                return std::nullopt;
                              }));
}

// Criterion 11.
SuiteReport suite_vexillary(const VerifyOptions& o) {
  const auto family = southwest_diagrams_in_box(o.family_box, o.family_box, o.family_box * o.family_box);
  const auto perms = all_permutations(4);
  const std::size_t total = family.size() + perms.size();
  return from_sweep(
      "vexillary",
      parallel_sweep(total, o.jobs, o.max_counterexamples,
                     [&](std::size_t k) -> std::optional<std::string> {
                       if (k < family.size()) {
                         const VexillaryCheck v = vexillary_theorem_check(family[k]);
                         if (v.consistent()) return std::nullopt;
                         return "D=" + grid_inline(family[k]) + (v.single_term ? " single term" : " several terms") +
                                (v.vexillary ? " but vexillary" : " but not vexillary");
                       }
                       const Permutation& w = perms[k - family.size()];
                       const bool avoids = !contains_pattern(w, {2, 1, 4, 3});
                       const Polynomial s = schubert_polynomial(w);
                       const auto exp = expand_in_basis(s, Basis::key);
                       if (!exp) return "w=" + format_permutation(w) + " has no key expansion";
                       if (avoids && !same_polynomial(s, demazure_character(lehmer_code(w), 4)))
                         return "w=" + format_permutation(w) + " Schubert differs from kappa of its code";
                       if (avoids != (exp->size() == 1))
                         return "w=" + format_permutation(w) + " expansion size " +
                                std::to_string(exp->size());
                       return std::nullopt;
                     }));
}

// Criterion 12.
SuiteReport suite_psi(const VerifyOptions& o) {
  const auto comps = weak_compositions(o.psi_parts, o.psi_size);
  return from_sweep(
      "psi", parallel_sweep(comps.size(), o.jobs, o.max_counterexamples,
                            [&](std::size_t k) -> std::optional<std::string> {
                              const Composition& a = comps[k];
                              const int n = static_cast<int>(a.size());
                              const KohnertSet kd = generate_kd(composition_diagram(a));
                              const auto tabs = enumerate_sskt(a);
                              const std::string where = "a=" + format_composition(a);
                              std::set<Diagram> images;
                              for (const Tableau& t : tabs) {
                                const Diagram p = psi(t);
                                if (!kd.contains(p)) return where + " psi leaves KD(D(a))";
                                if (padded(weight(p), n) != tableau_weight(t, n))
                                  return where + " psi changes weight";
                                images.insert(p);
                                for (int i = 1; i <= n; ++i) {
                                  const auto e = sskt_raise(t, i);
                                  const auto er = raising(p, i);
                                  if (e.has_value() != er.has_value() || (e && psi(*e) != *er))
                                    return where + " psi does not intertwine e_" + std::to_string(i);
                                }
                              }
                              if (images.size() != tabs.size() || images.size() != kd.size())
                                return where + " " + std::to_string(tabs.size()) + " key tableaux, " +
                                       std::to_string(kd.size()) + " Kohnert diagrams";
                              return std::nullopt;
                            }));
}

Polynomial random_polynomial(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, 3), coef(-3, 3), count(1, 6);
  Polynomial p(n);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n);
    for (int& v : e) v = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

// Criterion 13.
SuiteReport suite_algebra(const VerifyOptions& o) {
  const int samples = o.algebra_samples;
  const std::uint64_t seed = o.seed;
  return from_sweep(
      "algebra",
      parallel_sweep(static_cast<std::size_t>(samples), o.jobs, o.max_counterexamples,
                     [&](std::size_t k) -> std::optional<std::string> {
                       std::mt19937_64 rng(seed + 7919 * k);
                       const int n = 5;
                       const Polynomial f = random_polynomial(n, rng);
                       const std::string where = "sample " + std::to_string(k);
                       using Op = Polynomial (*)(int, const Polynomial&);
                       const std::pair<const char*, Op> ops[] = {{"d", divided_difference},
                                                                 {"pi", pi_operator}};
                       for (const auto& [name, op] : ops) {
                         for (int i = 1; i < n; ++i) {
                           const Polynomial once = op(i, f);
                           const Polynomial twice = op(i, once);
                           const bool is_d = std::string(name) == "d";
                           if (is_d ? !twice.is_zero() : twice != once)
                             return where + " " + name + "_" + std::to_string(i) + " squared";
                           for (int j = i + 2; j < n; ++j)
                             if (op(i, op(j, f)) != op(j, op(i, f)))
                               return where + " " + name + " commutation " + std::to_string(i) + "," +
                                      std::to_string(j);
                           if (i + 1 < n && op(i, op(i + 1, op(i, f))) != op(i + 1, op(i, op(i + 1, f))))
                             return where + " " + name + " braid at " + std::to_string(i);
                         }
                       }
                       // Reduced-word independence.
                       std::uniform_int_distribution<int> size_pick(3, 5);
                       const int m = size_pick(rng);
                       auto perms = all_permutations(m);
                       std::uniform_int_distribution<std::size_t> perm_pick(0, perms.size() - 1);
                       const Permutation w = perms[perm_pick(rng)];
                       const Word sw = random_reduced_word(schubert_word_target(w), rng);
                       if (schubert_polynomial_with_word(w, sw) != schubert_polynomial(w))
                         return where + " Schubert polynomial depends on the word for w=" +
                                format_permutation(w);
                       std::uniform_int_distribution<int> part(0, 2);
                       Composition a(4);
                       for (int& v : a) v = part(rng);
                       const auto [lambda, kw] = sort_and_minimal_perm(a);
                       const Word kword = random_reduced_word(inverse(kw), rng);
                       if (!same_polynomial(demazure_character_with_word(a, kword), demazure_character(a)))
                         return where + " key polynomial depends on the word for a=" + format_composition(a);
                       const auto canonical = demazure_subset(lambda, kw, 4);
                       if (demazure_subset_with_word(lambda, kword) != canonical)
                         return where + " Demazure crystal depends on the word for a=" + format_composition(a);
                       // Demazure operators on that Demazure crystal.
                       for (int i = 1; i < 4; ++i) {
                         const auto once = demazure_operator(canonical, i);
                         if (demazure_operator(once, i) != once)
                           return where + " Demazure operator " + std::to_string(i) + " not idempotent";
                         if (i + 1 < 4 &&
                             demazure_operator(demazure_operator(demazure_operator(canonical, i), i + 1), i) !=
                                 demazure_operator(demazure_operator(demazure_operator(canonical, i + 1), i),
                                                   i + 1))
                           return where + " Demazure operator braid at " + std::to_string(i);
                         for (int j = i + 2; j < 4; ++j)
                           if (demazure_operator(demazure_operator(canonical, i), j) !=
                               demazure_operator(demazure_operator(canonical, j), i))
                             return where + " Demazure operators " + std::to_string(i) + "," +
                                    std::to_string(j) + " do not commute";
                       }
                       return std::nullopt;
                     }));
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"kohnert-vs-pi", suite_kohnert_vs_pi}, {"schubert", suite_schubert},
      {"two-components", suite_two_components},                   {"rothe-13625847", suite_rothe},
      {"closure", suite_closure},             {"commute", suite_commute},
      {"membership", suite_membership},       {"crystal-iso", suite_crystal_iso},
      {"yamanouchi", suite_yamanouchi},       {"slide", suite_slide},
      {"vexillary", suite_vexillary},         {"psi", suite_psi},
      {"algebra", suite_algebra}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    try {
      r = fn(opts);
    } catch (const std::exception& e) {
      r.name = name;
      r.passed = false;
      ++r.failures;
      r.counterexamples.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace kohnert
