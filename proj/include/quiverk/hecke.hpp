#pragma once

#include <span>
#include <utility>
#include <vector>

#include "quiverk/perm.hpp"

namespace quiverk {

/// A permutation together with the sign it carries in the degenerate Hecke
/// algebra (generators s_i with s_i^2 = -s_i).
struct SignedPerm {
  Permutation perm;
  int sign = 1;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// w * s_i in the absolute Hecke product: w s_i when that is longer, else w.
Permutation hecke_step(const Permutation& w, int i);

/// Absolute Hecke (Demazure) product of u and v.
Permutation hecke_mul(const Permutation& u, const Permutation& v);

/// Absolute Hecke product of any number of factors, left to right.
Permutation hecke_mul(std::span<const Permutation> factors);

/// Product of the letters s_{word[0]} s_{word[1]} ... in the degenerate Hecke
/// algebra; the sign is (-1)^{len(word) - length(perm)}.
SignedPerm hecke_word_product(std::span<const int> word);

/// All (u, v) in S_k x S_k with hecke_mul(u, v) == w, sorted.
std::vector<std::pair<Permutation, Permutation>> hecke_factor_pairs(const Permutation& w, int k);

}  // namespace quiverk
