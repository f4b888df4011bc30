// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/tableaux.hpp"

#include "kohnert/crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kohnert {

Composition Tableau::shape() const {
  Composition a;
  for (const auto& r : rows) a.push_back(static_cast<int>(r.size()));
  return a;
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

Composition tableau_weight(const Tableau& t, int n) {
  Composition w(n, 0);
  for (const auto& r : t.rows)
    for (int v : r) {
      if (v < 1 || v > n) throw std::invalid_argument("entry exceeds variable count");
      ++w[v - 1];
    }
  return w;
}

std::string format_tableau(const Tableau& t) {
  std::ostringstream os;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    for (std::size_t k = 0; k < it->size(); ++k) os << (k ? " " : "") << (*it)[k];
    os << '\n';
  }
  return os.str();
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> top_first(1);
  for (char ch : text) {
    if (ch == '/') top_first.emplace_back();
    else if (ch >= '1' && ch <= '9') top_first.back().push_back(ch - '0');
    else throw std::invalid_argument("tableau text uses digits and '/' only");
  }
  Tableau t;
  t.rows.assign(top_first.rbegin(), top_first.rend());
  return t;
}

namespace {

// (row, entry) pairs of column c, bottom to top.
std::vector<std::pair<int, int>> column_entries(const Tableau& t, int c) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (static_cast<int>(t.rows[r].size()) >= c)
      out.push_back({static_cast<int>(r) + 1, t.rows[r][c - 1]});
  return out;
}

int max_width(const Tableau& t) {
  int w = 0;
  for (const auto& r : t.rows) w = std::max(w, static_cast<int>(r.size()));
  return w;
}

struct EntryPairing {
  std::vector<Cell> unpaired_open;   // by column
  std::vector<Cell> unpaired_close;  // by column
};

// Same-column cells pair first; then each closer takes the nearest unpaired
// opener to its left.
EntryPairing pair_entries(const Tableau& t, int opener, int closer) {
  EntryPairing p;
  std::vector<Cell> stack;
  const int width = max_width(t);
  for (int c = 1; c <= width; ++c) {
    std::optional<Cell> o, k;
    for (auto [r, v] : column_entries(t, c)) {
      if (v == opener) o = Cell{c, r};
      if (v == closer) k = Cell{c, r};
    }
    if (o && k) continue;
    if (o) stack.push_back(*o);
    if (k) {
      if (!stack.empty()) stack.pop_back();
      else p.unpaired_close.push_back(*k);
    }
  }
  p.unpaired_open = std::move(stack);
  return p;
}

int& at(Tableau& t, Cell x) { return t.rows[x.row - 1][x.col - 1]; }

}  // namespace

bool is_ssyt(const Tableau& t, int n) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v < 1 || v > n) return false;
      if (c > 0 && t.rows[r][c - 1] > v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

Tableau highest_weight_tableau(const Composition& lambda) {
  Tableau t;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    t.rows.push_back(std::vector<int>(lambda[r], static_cast<int>(r) + 1));
  while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
  return t;
}

std::optional<Tableau> ssyt_lower(const Tableau& t, int i) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  const EntryPairing p = pair_entries(t, i + 1, i);
  if (p.unpaired_close.empty()) return std::nullopt;
  Tableau out = t;
  at(out, p.unpaired_close.back()) = i + 1;
  return out;
}

std::optional<Tableau> ssyt_raise(const Tableau& t, int i) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  const EntryPairing p = pair_entries(t, i + 1, i);
  if (p.unpaired_open.empty()) return std::nullopt;
  Tableau out = t;
  at(out, p.unpaired_open.front()) = i;
  return out;
}

std::vector<Tableau> enumerate_ssyt(const Composition& lambda, int n) {
  Tableau t;
  for (int len : lambda)
    if (len > 0) t.rows.push_back(std::vector<int>(len, 0));
  std::vector<Cell> order;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c)
      order.push_back({static_cast<int>(c) + 1, static_cast<int>(r) + 1});
  std::vector<Tableau> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(t);
      return;
    }
    const Cell x = order[k];
    int lo = 1;
    if (x.col > 1) lo = std::max(lo, t.rows[x.row - 1][x.col - 2]);
    if (x.row > 1) lo = std::max(lo, t.rows[x.row - 2][x.col - 1] + 1);
    for (int v = lo; v <= n; ++v) {
      at(t, x) = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

TableauCrystal build_crystal(const Composition& lambda, int n) {
  TableauCrystal g;
  g.n = n;
  const Tableau u = highest_weight_tableau(lambda);
  if (!is_ssyt(u, n)) throw std::invalid_argument("partition longer than the variable count");
  g.elements.push_back(u);
  g.index.emplace(u, 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (int i = 1; i < n; ++i) {
      auto img = ssyt_lower(g.elements[head], i);
      if (!img) continue;
      auto [it, fresh] = g.index.try_emplace(*img, g.elements.size());
      if (fresh) g.elements.push_back(*img);
      g.edges.push_back({head, i, it->second});
    }
  }
  return g;
}

std::set<Tableau> demazure_operator(const std::set<Tableau>& x, int i) {
  std::set<Tableau> out = x;
  for (const Tableau& b : x) {
    std::optional<Tableau> cur = ssyt_lower(b, i);
    while (cur) {
      out.insert(*cur);
      cur = ssyt_lower(*cur, i);
    }
  }
  return out;
}

std::set<Tableau> demazure_subset_with_word(const Composition& lambda, const Word& word) {
  std::set<Tableau> x{highest_weight_tableau(lambda)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = demazure_operator(x, *it);
  return x;
}

std::set<Tableau> demazure_subset(const Composition& lambda, const Permutation& w, int n) {
  if (n < static_cast<int>(w.size())) throw std::invalid_argument("n below permutation size");
  return demazure_subset_with_word(lambda, reduced_word(inverse(extended(w, n))));
}

Polynomial character(const std::set<Tableau>& x, int n) {
  Polynomial p(n);
  for (const Tableau& t : x) p.add_term(tableau_weight(t, n), 1);
  return p;
}

Polynomial character(const std::vector<Diagram>& x, int n) {
  Polynomial p(n);
  for (const Diagram& t : x) {
    const Composition w = trimmed(weight(t));
    if (static_cast<int>(w.size()) > n) throw std::invalid_argument("diagram taller than n");
    p.add_term(padded(w, n), 1);
  }
  return p;
}

Tableau phi(const Diagram& t, int n) {
  if (!is_rectified(t)) throw std::invalid_argument("phi requires a rectified diagram");
  if (t.max_row() > n) throw std::invalid_argument("diagram taller than n");
  Tableau out;
  for (int c = 1; c <= t.max_col(); ++c) {
    std::vector<int> entries;
    for (int r : t.rows_in_column(c)) entries.push_back(n - r + 1);
    std::sort(entries.begin(), entries.end());
    if (c > 1 && entries.size() > static_cast<std::size_t>(t.rows_in_column(c - 1).size()))
      throw std::invalid_argument("column lengths increase");
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (out.rows.size() <= j) out.rows.emplace_back();
      out.rows[j].push_back(entries[j]);
    }
  }
  return out;
}

bool is_sskt(const Tableau& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v < 1 || v > row) return false;
      if (c > 0 && t.rows[r][c - 1] < v) return false;
    }
  }
  const int width = max_width(t);
  for (int c = 1; c <= width; ++c) {
    const auto col = column_entries(t, c);
    for (std::size_t lo = 0; lo < col.size(); ++lo)
      for (std::size_t hi = lo + 1; hi < col.size(); ++hi) {
        const auto [rk, k] = col[lo];
        const int i = col[hi].second;
        if (i == k) return false;  // column entries are distinct
        if (i < k) {
          const auto& row = t.rows[rk - 1];
          if (static_cast<int>(row.size()) <= c || row[c] <= i) return false;
        }
      }
  }
  return true;
}

std::vector<Tableau> enumerate_sskt(const Composition& a) {
  Tableau t;
  for (int len : a) t.rows.push_back(std::vector<int>(len, 0));
  std::vector<Cell> order;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c)
      order.push_back({static_cast<int>(c) + 1, static_cast<int>(r) + 1});
  std::vector<Tableau> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      if (is_sskt(t)) out.push_back(t);
      return;
    }
    const Cell x = order[k];
    int hi = x.row;
    if (x.col > 1) hi = std::min(hi, t.rows[x.row - 1][x.col - 2]);
    for (int v = 1; v <= hi; ++v) {
      at(t, x) = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Diagram psi(const Tableau& t) {
  if (!is_sskt(t)) throw std::invalid_argument("psi requires a semistandard key tableau");
  std::vector<Cell> cells;
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) cells.push_back({static_cast<int>(c) + 1, row[c]});
  return Diagram(std::move(cells));
}

std::optional<Tableau> sskt_raise(const Tableau& t, int i) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  const EntryPairing p = pair_entries(t, i, i + 1);
  if (p.unpaired_close.empty()) return std::nullopt;
  Tableau out = t;
  const Cell x = p.unpaired_close.back();
  at(out, x) = i;
  for (int c = x.col - 1; c >= 1; --c) {
    if (at(out, {c, x.row}) != i + 1) break;
    std::optional<Cell> above;
    for (auto [r, v] : column_entries(out, c))
      if (r > x.row && v == i) above = Cell{c, r};
    if (!above) break;
    at(out, {c, x.row}) = i;
    at(out, *above) = i + 1;
  }
  return out;
}

}  // namespace kohnert
