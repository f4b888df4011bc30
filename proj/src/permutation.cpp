// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#include "kohnert/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kohnert {

bool is_permutation(const Permutation& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Permutation longest_permutation(int n) {
  Permutation w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return w;
}

Permutation inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = u[v[i] - 1];
  return out;
}

Permutation extended(Permutation w, int n) {
  for (int v = static_cast<int>(w.size()) + 1; v <= n; ++v) w.push_back(v);
  return w;
}

int length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

namespace {

// Left descents i of w: value i+1 sits before value i.
std::vector<int> left_descents(const Permutation& w) {
  const Permutation pos = inverse(w);
  std::vector<int> out;
  for (int i = 1; i < static_cast<int>(w.size()); ++i)
    if (pos[i] < pos[i - 1]) out.push_back(i);
  return out;
}

void swap_values(Permutation& w, int i) {
  for (int& v : w) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
}

template <class Pick>
Word strip_descents(Permutation w, Pick pick) {
  Word word;
  for (;;) {
    auto d = left_descents(w);
    if (d.empty()) break;
    int i = pick(d);
    word.push_back(i);
    swap_values(w, i);
  }
  return word;
}

}  // namespace

Word reduced_word(const Permutation& w) {
  return strip_descents(w, [](const std::vector<int>& d) { return d.front(); });
}

Word reduced_word_largest(const Permutation& w) {
  return strip_descents(w, [](const std::vector<int>& d) { return d.back(); });
}

Word random_reduced_word(const Permutation& w, std::mt19937_64& rng) {
  return strip_descents(w, [&rng](const std::vector<int>& d) {
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    return d[pick(rng)];
  });
}

Permutation word_product(const Word& word, int n) {
  Permutation p = identity_permutation(n);
  for (int r : word) {
    if (r < 1 || r >= n) throw std::invalid_argument("word letter out of range");
    std::swap(p[r - 1], p[r]);
  }
  return p;
}

bool is_reduced_word_for(const Word& word, const Permutation& w) {
  return static_cast<int>(word.size()) == length(w) &&
         word_product(word, static_cast<int>(w.size())) == w;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation w = identity_permutation(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b)
        if ((w[idx[a]] < w[idx[b]]) != (pattern[a] < pattern[b])) match = false;
    if (match) return true;
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) return false;
    ++idx[t];
    for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

}  // namespace kohnert
