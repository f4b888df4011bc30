// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kohnert {

Polynomial Polynomial::constant(int n, const BigInt& c) {
  Polynomial p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponents exps, const BigInt& c) {
  Polynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void Polynomial::check(const Exponents& e) const {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("monomial length differs from variable count");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
}

BigInt Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Polynomial::total() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  check(e);
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  Polynomial out(n_);
  Exponents e(n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int k = 0; k < n_; ++k) e[k] = a[k] + b[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::times_variable(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("variable index out of range");
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    ++f[i - 1];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::swapped(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("operator index out of range");
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[i - 1], f[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::with_variables(int m) const {
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Exponents f(m, 0);
    for (int k = 0; k < n_; ++k) {
      if (k < m) f[k] = e[k];
      else if (e[k] != 0)
        throw std::invalid_argument("cannot drop a variable that occurs");
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

bool same_polynomial(const Polynomial& a, const Polynomial& b) {
  const int m = std::max(a.n(), b.n());
  return a.with_variables(m) == b.with_variables(m);
}

Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1 || i >= f.n()) throw std::out_of_range("divided difference index out of range");
  const Polynomial numerator = f - f.swapped(i);
  // Synthetic division by (x_i - x_{i+1}), highest x_i-degree first.
  using Key = std::pair<int, Exponents>;
  std::map<Key, BigInt, std::greater<Key>> rem;
  for (const auto& [e, c] : numerator.terms()) rem.emplace(Key{e[i - 1], e}, c);
  Polynomial quotient(f.n());
  while (!rem.empty()) {
    auto it = rem.begin();
    const int d = it->first.first;
    Exponents e = it->first.second;
    const BigInt c = it->second;
    rem.erase(it);
    if (d == 0) throw std::logic_error("divided difference left a remainder");
    --e[i - 1];
    quotient.add_term(e, c);
    ++e[i];
    Key k{d - 1, e};
    auto [jt, fresh] = rem.try_emplace(k, c);
    if (!fresh) {
      jt->second += c;
      if (jt->second == 0) rem.erase(jt);
    }
  }
  return quotient;
}

Polynomial pi_operator(int i, const Polynomial& f) {
  if (i < 1 || i >= f.n()) throw std::out_of_range("pi operator index out of range");
  return divided_difference(i, f.times_variable(i));
}

Polynomial apply_divided_differences(const Word& word, const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(*it, g);
  return g;
}

Polynomial apply_pi_operators(const Word& word, const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = pi_operator(*it, g);
  return g;
}

Polynomial staircase_monomial(int n) {
  Exponents e(n, 0);
  for (int k = 0; k < n; ++k) e[k] = n - 1 - k;
  return Polynomial::monomial(e);
}

namespace {

Permutation schubert_target(const Permutation& w, int n) {
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
  if (n < static_cast<int>(w.size())) throw std::invalid_argument("n below permutation size");
  const Permutation we = extended(w, n);
  return compose(inverse(we), longest_permutation(n));
}

}  // namespace

Polynomial schubert_polynomial(const Permutation& w, int n) {
  if (n == 0) n = static_cast<int>(w.size());
  const Permutation v = schubert_target(w, n);
  return apply_divided_differences(reduced_word(v), staircase_monomial(n));
}

Polynomial schubert_polynomial_with_word(const Permutation& w, const Word& word) {
  const int n = static_cast<int>(w.size());
  if (!is_reduced_word_for(word, schubert_target(w, n)))
    throw std::invalid_argument("word is not a reduced word of w^{-1} w0");
  return apply_divided_differences(word, staircase_monomial(n));
}

Word key_word(const Composition& a) {
  // lambda[w(i)] = a[i] means a = lambda o w, which is reached from x^lambda
  // by the operators of a reduced word for w^{-1}.
  return reduced_word(inverse(sort_and_minimal_perm(a).second));
}

Polynomial demazure_character(const Composition& a, int n) {
  const Composition t = trimmed(a);
  if (n == 0) n = static_cast<int>(a.size());
  if (n < static_cast<int>(t.size())) throw std::invalid_argument("n below composition length");
  const Composition b = padded(t, n);
  const auto [lambda, w] = sort_and_minimal_perm(b);
  return apply_pi_operators(reduced_word(inverse(w)), Polynomial::monomial(lambda));
}

Polynomial demazure_character_with_word(const Composition& a, const Word& word) {
  const auto [lambda, w] = sort_and_minimal_perm(a);
  if (!is_reduced_word_for(word, inverse(w)))
    throw std::invalid_argument("word is not a reduced word for the key permutation");
  return apply_pi_operators(word, Polynomial::monomial(lambda));
}

namespace {

bool refines(const Composition& fine, const Composition& coarse) {
  std::size_t j = 0;
  int acc = 0;
  for (int v : fine) {
    if (v == 0) continue;
    if (j >= coarse.size()) return false;
    acc += v;
    if (acc == coarse[j]) {
      ++j;
      acc = 0;
    } else if (acc > coarse[j]) {
      return false;
    }
  }
  return acc == 0 && j == coarse.size();
}

Composition flattened(const Composition& a) {
  Composition out;
  for (int v : a)
    if (v != 0) out.push_back(v);
  return out;
}

}  // namespace

Polynomial fundamental_slide(const Composition& a, int n) {
  const Composition t = trimmed(a);
  if (n == 0) n = static_cast<int>(a.size());
  if (n < static_cast<int>(t.size())) throw std::invalid_argument("n below composition length");
  const Composition full = padded(t, n);
  const Composition flat = flattened(full);
  std::vector<int> prefix(n + 1, 0);
  for (int k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + full[k];
  const int size = prefix[n];
  Polynomial out(n);
  Exponents b(n, 0);
  std::function<void(int, int)> rec = [&](int k, int used) {
    if (k == n) {
      if (used == size && refines(b, flat)) out.add_term(b, 1);
      return;
    }
    for (int v = 0; used + v <= size; ++v) {
      if (used + v < prefix[k + 1]) continue;
      b[k] = v;
      rec(k + 1, used + v);
    }
    b[k] = 0;
  };
  rec(0, 0);
  return out;
}

Polynomial monomial_generating(const std::vector<Composition>& weights, int n) {
  Polynomial out(n);
  for (const Composition& w : weights) {
    const Composition t = trimmed(w);
    if (static_cast<int>(t.size()) > n) throw std::invalid_argument("weight longer than n");
    out.add_term(padded(t, n), 1);
  }
  return out;
}

Polynomial basis_element(const Composition& a, Basis basis, int n) {
  static std::mutex mu;
  static std::map<std::tuple<Composition, int, int>, Polynomial> cache;
  auto key = std::make_tuple(padded(trimmed(a), n), static_cast<int>(basis), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial p = basis == Basis::key ? demazure_character(std::get<0>(key), n)
                                     : fundamental_slide(std::get<0>(key), n);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 20000) cache.clear();
  cache.emplace(key, p);
  return p;
}

Polynomial sum_of_basis(const std::vector<Composition>& comps, Basis basis, int n) {
  Polynomial out(n);
  for (const Composition& a : comps) out += basis_element(a, basis, n);
  return out;
}

std::optional<std::vector<Composition>> expand_in_basis(const Polynomial& f, Basis basis) {
  std::vector<Composition> out;
  Polynomial rest = f;
  const int n = f.n();
  while (!rest.is_zero()) {
    // Every basis element is x^a plus lexicographically larger monomials.
    const auto& [lead, c] = *rest.terms().begin();
    if (c < 0) return std::nullopt;
    const Composition a = lead;
    const BigInt times = c;
    const Polynomial b = basis_element(a, basis, n);
    if (b.coefficient(a) != 1) throw std::logic_error("basis element is not unitriangular");
    rest -= b * times;
    if (rest.coefficient(a) != 0) throw std::logic_error("elimination did not progress");
    if (times > 1000000) throw std::runtime_error("expansion multiplicity too large to list");
    for (int k = 0; k < static_cast<int>(times); ++k) out.push_back(a);
  }
  return out;
}

std::string to_json(const Polynomial& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    nlohmann::ordered_json t;
    t["exps"] = it->first;
    if (it->second >= std::numeric_limits<std::int64_t>::min() &&
        it->second <= std::numeric_limits<std::int64_t>::max()) {
      t["coef"] = static_cast<std::int64_t>(it->second);
    } else {
      t["coef"] = it->second.str();  // exact decimal text beyond 64 bits
    }
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Polynomial p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("exps").get<Exponents>();
    const auto& c = t.at("coef");
    if (c.is_string()) p.add_term(e, BigInt(c.get<std::string>()));
    else p.add_term(e, BigInt(c.get<std::int64_t>()));
  }
  return p;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    BigInt c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      const int e = it->first[k];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) os << c;
    else if (c == 1) os << mono;
    else os << c << '*' << mono;
  }
  return os.str();
}

}  // namespace kohnert
