// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

// kohnert: command-line front end for Kohnert diagrams, key polynomials and
// Demazure crystals.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kohnert/crystal.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/kohnert_set.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/permutation.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/verify.hpp"

namespace {

using namespace kohnert;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3, kNotSouthwest = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  if (text == "identity") return {1};
  Permutation w;
  if (text.find(',') == std::string::npos && text.size() > 1) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw UsageError("permutation '" + text + "' is not one-line notation");
      w.push_back(ch - '0');
    }
  } else {
    w = parse_int_list(text);
  }
  if (!is_permutation(w)) throw UsageError("'" + text + "' is not a permutation");
  return w;
}

Composition parse_composition(const std::string& text) {
  Composition a = parse_int_list(text);
  for (int v : a)
    if (v < 0) throw UsageError("composition parts must be nonnegative");
  return a;
}

// The three mutually exclusive ways to name a diagram.
struct DiagramInput {
  std::string file;
  std::string comp;
  std::string perm;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--input,-i", file, "Grid file ('O' cell, '.' empty)");
    auto* c = cmd->add_option("--comp", comp, "Composition diagram, e.g. 0,3,2");
    auto* p = cmd->add_option("--perm", perm, "Rothe diagram of a permutation, e.g. 13625847");
    f->excludes(c)->excludes(p);
    c->excludes(p);
  }

  Diagram load() const {
    const int given = !file.empty() + !comp.empty() + !perm.empty();
    if (given != 1) throw UsageError("exactly one of --input, --comp, --perm is required");
    if (!file.empty()) return parse_grid(read_file(file));
    if (!comp.empty()) return composition_diagram(parse_composition(comp));
    return rothe_diagram(parse_permutation(perm));
  }
};

void require_southwest(const Diagram& d) {
  if (!is_southwest(d)) throw NotSouthwest("diagram is not southwest");
}

int cmd_kd(const DiagramInput& in, bool list, const std::string& format) {
  const KohnertSet kd = generate_kd(in.load());
  if (format == "json") {
    std::cout << kd_to_json(kd) << '\n';
  } else if (format == "dot") {
    std::cout << kd_to_dot(kd);
  } else {
    std::cout << kd.size() << (kd.size() == 1 ? " diagram" : " diagrams") << '\n';
    if (list) {
      std::vector<Diagram> sorted = kd.members;
      std::sort(sorted.begin(), sorted.end());
      for (const Diagram& t : sorted) std::cout << '\n' << format_grid(t);
    }
  }
  return kOk;
}

struct PolyArgs {
  std::string diagram, perm, key, slide;
  int n = 0;
};

int cmd_poly(const PolyArgs& a) {
  const int given = !a.diagram.empty() + !a.perm.empty() + !a.key.empty() + !a.slide.empty();
  if (given != 1) throw UsageError("exactly one of --diagram, --perm, --key, --slide is required");
  Polynomial p;
  if (!a.diagram.empty()) p = kohnert_polynomial(parse_grid(read_file(a.diagram)));
  else if (!a.perm.empty()) p = schubert_polynomial(parse_permutation(a.perm));
  else if (!a.key.empty()) p = demazure_character(parse_composition(a.key));
  else p = fundamental_slide(parse_composition(a.slide));
  if (a.n > 0) p = p.with_variables(std::max(a.n, p.n()));
  std::cout << to_json(p) << '\n';
  return kOk;
}

int cmd_expand(const DiagramInput& in, const std::string& basis, bool check) {
  const Diagram d = in.load();
  require_southwest(d);
  const bool key = basis == "key";
  const std::vector<Composition> comps = key ? demazure_expansion(d) : slide_expansion(d);
  for (const Composition& a : comps) std::cout << format_composition(a) << '\n';
  if (!check) return kOk;
  const int n = std::max(1, d.max_row());
  const bool ok = same_polynomial(sum_of_basis(comps, key ? Basis::key : Basis::slide, n),
                                  kohnert_polynomial(d));
  std::cout << (ok ? "check: PASS" : "check: FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

int cmd_crystal(const DiagramInput& in, bool json) {
  const Diagram d = in.load();
  require_southwest(d);
  const CrystalGraph g = crystal_graph(generate_kd(d));
  if (json) {
    std::cout << crystal_components_json(g) << '\n';
    return kOk;
  }
  std::vector<std::string> notes;
  for (const auto& comp : g.components) {
    std::vector<Diagram> nodes;
    for (std::size_t v : comp) nodes.push_back(g.nodes[v]);
    const ComponentData cd = component_demazure_data(nodes, d);
    notes.push_back("lambda=" + format_composition(cd.lambda) + " w=" + format_permutation(cd.w) +
                    " a=" + format_composition(cd.a));
  }
  std::cout << crystal_to_dot(g, notes);
  return kOk;
}

std::pair<int, int> parse_box(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("box must look like 3x3");
  const Composition a = parse_int_list(text.substr(0, x));
  const Composition b = parse_int_list(text.substr(x + 1));
  if (a.size() != 1 || b.size() != 1 || a[0] < 1 || b[0] < 1)
    throw UsageError("box must look like 3x3");
  return {a[0], b[0]};
}

struct VerifyArgs {
  std::vector<std::string> suites;
  VerifyOptions opts;
  std::string n_list;
  std::string box;
};

int cmd_verify(VerifyArgs& a) {
  if (!a.n_list.empty()) a.opts.schubert_n = parse_int_list(a.n_list);
  for (int n : a.opts.schubert_n)
    if (n < 1 || n > 7) throw UsageError("--n values must lie in 1..7");
  if (!a.box.empty()) {
    const auto [c, r] = parse_box(a.box);
    if (c != r) throw UsageError("only square boxes are supported");
    if (c > 4) throw UsageError("box side must be at most 4");
    a.opts.family_box = c;
    a.opts.membership_box = c;
    a.opts.closure_box = c;
  }
  if (a.opts.max_parts > 8 || a.opts.max_size > 10) throw UsageError("composition bounds too large");
  if (a.suites.empty() || (a.suites.size() == 1 && a.suites[0] == "all")) a.suites = suite_names();
  for (const auto& s : a.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite '" + s + "'");
  bool all = true;
  for (const auto& s : a.suites) {
    const SuiteReport r = run_suite(s, a.opts);
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, "
              << r.failures << " failures)\n";
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_membership(const std::string& target, const DiagramInput& in, bool explain) {
  const Diagram t = parse_grid(read_file(target));
  const Diagram d = in.load();
  require_southwest(d);
  const LabelingResult res = kohnert_labeling(t, d);
  const bool member = res.defined() && is_flagged(res.labeling);
  std::cout << (member ? "member" : "non-member");
  if (!member) {
    std::cout << ": " << (res.defined() ? "labeling is not flagged" : res.reason());
  }
  std::cout << '\n';
  if (explain && res.status != LabelingStatus::column_weights_differ)
    std::cout << format_labeled_grid(res.labeling);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kohnert diagrams, key polynomials and Demazure crystals"};
  app.require_subcommand(1);

  DiagramInput kd_in;
  bool kd_list = false;
  std::string kd_format = "text";
  auto* kd = app.add_subcommand("kd", "Enumerate the Kohnert diagrams of a diagram");
  kd_in.attach(kd);
  kd->add_flag("--list", kd_list, "Print every member grid");
  kd->add_option("--format", kd_format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print a polynomial as JSON");
  poly->add_option("--diagram", poly_args.diagram, "Kohnert polynomial of a grid file");
  poly->add_option("--perm", poly_args.perm, "Schubert polynomial");
  poly->add_option("--key", poly_args.key, "Key polynomial of a weak composition");
  poly->add_option("--slide", poly_args.slide, "Fundamental slide polynomial");
  poly->add_option("-n", poly_args.n, "Minimum number of variables");

  DiagramInput ex_in;
  std::string basis = "key";
  bool ex_check = false;
  auto* expand = app.add_subcommand("expand", "Key or slide expansion of a southwest diagram");
  ex_in.attach(expand);
  expand->add_option("basis", basis, "key or slide")->check(CLI::IsMember({"key", "slide"}));
  expand->add_flag("--check", ex_check, "Recompute the Kohnert polynomial and compare");

  DiagramInput cr_in;
  bool cr_json = false;
  auto* crystal = app.add_subcommand("crystal", "Kohnert crystal as DOT");
  cr_in.attach(crystal);
  crystal->add_flag("--json", cr_json, "Component summary instead of DOT");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", va.suites, "Suite names or 'all'");
  verify->add_option("--max-parts", va.opts.max_parts, "Parts of the compositions checked");
  verify->add_option("--max-size", va.opts.max_size, "Largest composition size");
  verify->add_option("--n", va.n_list, "Permutation sizes, e.g. 4,5");
  verify->add_option("--box", va.box, "Box for exhaustive diagram families, e.g. 3x3");
  verify->add_option("--cells", va.opts.closure_cells, "Cell bound for the closure family");
  verify->add_option("--samples", va.opts.commute_samples, "Random diagrams for commute");
  verify->add_option("--seed", va.opts.seed, "Random seed");
  verify->add_option("--jobs,-j", va.opts.jobs, "Worker threads")->check(CLI::Range(1, 256));

  DiagramInput mem_in;
  std::string mem_target;
  bool mem_explain = false;
  auto* mem = app.add_subcommand("membership", "Decide T in KD(D) by labeling");
  mem->add_option("target", mem_target, "Grid file of T")->required();
  mem_in.attach(mem);
  mem->add_flag("--explain", mem_explain, "Print the labeling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kd) return cmd_kd(kd_in, kd_list, kd_format);
    if (*poly) return cmd_poly(poly_args);
    if (*expand) return cmd_expand(ex_in, basis, ex_check);
    if (*crystal) return cmd_crystal(cr_in, cr_json);
    if (*verify) return cmd_verify(va);
    if (*mem) return cmd_membership(mem_target, mem_in, mem_explain);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
              << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotSouthwest& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotSouthwest;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
