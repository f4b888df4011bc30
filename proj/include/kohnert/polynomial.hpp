// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_POLYNOMIAL_HPP
#define KOHNERT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/permutation.hpp"

namespace kohnert {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

// Sparse polynomial in x_1..x_n with integer coefficients. Zero
// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int n = 0) : n_(n) {}
  static Polynomial constant(int n, const BigInt& c);
  static Polynomial monomial(Exponents exps, const BigInt& c = 1);

  int n() const { return n_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coefficient(const Exponents& e) const;
  BigInt total() const;  // value at x_i = 1

  void add_term(const Exponents& e, const BigInt& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const BigInt& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  Polynomial operator*(const Polynomial& o) const;

  Polynomial times_variable(int i) const;  // x_i * f, 1-based
  Polynomial swapped(int i) const;         // s_i f
  // Re-expresses in m variables; throws if a used variable would be dropped.
  Polynomial with_variables(int m) const;

  bool operator==(const Polynomial& o) const = default;

 private:
  void check(const Exponents& e) const;
  int n_;
  std::map<Exponents, BigInt> terms_;
};

// Equality after padding both sides to a common variable count.
bool same_polynomial(const Polynomial& a, const Polynomial& b);

Polynomial divided_difference(int i, const Polynomial& f);
Polynomial pi_operator(int i, const Polynomial& f);
// Apply the operators of a word; the rightmost letter acts first.
Polynomial apply_divided_differences(const Word& word, const Polynomial& f);
Polynomial apply_pi_operators(const Word& word, const Polynomial& f);

Polynomial staircase_monomial(int n);
// n defaults to the length of the permutation.
Polynomial schubert_polynomial(const Permutation& w, int n = 0);
Polynomial schubert_polynomial_with_word(const Permutation& w, const Word& word);

// Word acting on x^lambda for the key polynomial of a.
Word key_word(const Composition& a);
Polynomial demazure_character(const Composition& a, int n = 0);
Polynomial demazure_character_with_word(const Composition& a, const Word& word);

Polynomial fundamental_slide(const Composition& a, int n = 0);

Polynomial monomial_generating(const std::vector<Composition>& weights, int n);

enum class Basis { key, slide };

// Greedy triangular elimination; nullopt when a negative coefficient shows up.
std::optional<std::vector<Composition>> expand_in_basis(const Polynomial& f,
                                                        Basis basis);
Polynomial basis_element(const Composition& a, Basis basis, int n);
Polynomial sum_of_basis(const std::vector<Composition>& comps, Basis basis, int n);

std::string to_json(const Polynomial& f);
Polynomial polynomial_from_json(const std::string& text);
std::string to_string(const Polynomial& f);  // human readable

}  // namespace kohnert

#endif  // KOHNERT_POLYNOMIAL_HPP
