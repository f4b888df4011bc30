// Copyright 2026 The kohnert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef KOHNERT_PERMUTATION_HPP
#define KOHNERT_PERMUTATION_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "kohnert/diagram.hpp"

namespace kohnert {

// A word [r_l, ..., r_1] names the product s_{r_l} ... s_{r_1}; the
// rightmost letter acts first when the word is applied as operators.
using Word = std::vector<int>;

bool is_permutation(const Permutation& w);
Permutation identity_permutation(int n);
Permutation longest_permutation(int n);
Permutation inverse(const Permutation& w);
Permutation compose(const Permutation& u, const Permutation& v);  // u after v
Permutation extended(Permutation w, int n);  // fixed points appended
int length(const Permutation& w);

// Lexicographically smallest reduced word, by repeatedly stripping the
// smallest left descent.
Word reduced_word(const Permutation& w);
// Lexicographically largest reduced word (largest left descent first).
Word reduced_word_largest(const Permutation& w);
// Uniformly chosen left descent at every step.
Word random_reduced_word(const Permutation& w, std::mt19937_64& rng);
// Product of the word's simple transpositions in S_n.
Permutation word_product(const Word& word, int n);
bool is_reduced_word_for(const Word& word, const Permutation& w);

std::vector<Permutation> all_permutations(int n);
bool contains_pattern(const Permutation& w, const Permutation& pattern);

}  // namespace kohnert

#endif  // KOHNERT_PERMUTATION_HPP
