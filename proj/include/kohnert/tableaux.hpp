// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_TABLEAUX_HPP
#define KOHNERT_TABLEAUX_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/permutation.hpp"
#include "kohnert/polynomial.hpp"

namespace kohnert {

// Filling of a shape drawn with row 1 at the bottom; rows[r-1] lists the
// entries of row r from left to right. Young tableaux and key tableaux share
// this representation; their shapes are a partition and a weak composition.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Composition shape() const;
  int size() const;
  auto operator<=>(const Tableau&) const = default;
};

Composition tableau_weight(const Tableau& t, int n);
std::string format_tableau(const Tableau& t);  // top row first
// Rows separated by '/', top row first, e.g. "22/111".
Tableau parse_tableau(const std::string& text);

bool is_ssyt(const Tableau& t, int n);
Tableau highest_weight_tableau(const Composition& lambda);
std::optional<Tableau> ssyt_lower(const Tableau& t, int i);
std::optional<Tableau> ssyt_raise(const Tableau& t, int i);
std::vector<Tableau> enumerate_ssyt(const Composition& lambda, int n);

struct TableauCrystal {
  int n = 0;
  std::vector<Tableau> elements;  // breadth-first from the highest weight
  std::map<Tableau, std::size_t> index;
  struct Edge {
    std::size_t from;
    int i;
    std::size_t to;  // lowering image
  };
  std::vector<Edge> edges;
  std::size_t highest = 0;

  bool contains(const Tableau& t) const { return index.count(t) != 0; }
};

TableauCrystal build_crystal(const Composition& lambda, int n);

// D_i(X) = { b : e_i^k(b) in X for some k >= 0 }.
std::set<Tableau> demazure_operator(const std::set<Tableau>& x, int i);
std::set<Tableau> demazure_subset_with_word(const Composition& lambda, const Word& word);
// The word used is a reduced word of w^{-1}, matching lambda[w(i)] = a[i].
std::set<Tableau> demazure_subset(const Composition& lambda, const Permutation& w, int n);

Polynomial character(const std::set<Tableau>& x, int n);
Polynomial character(const std::vector<Diagram>& x, int n);

// Rectified diagram to tableau: row r becomes entry n-r+1, columns sorted.
Tableau phi(const Diagram& t, int n);

bool is_sskt(const Tableau& t);
std::vector<Tableau> enumerate_sskt(const Composition& a);
// Cell (c, r) iff column c of the key tableau contains r.
Diagram psi(const Tableau& t);
std::optional<Tableau> sskt_raise(const Tableau& t, int i);

}  // namespace kohnert

#endif  // KOHNERT_TABLEAUX_HPP
