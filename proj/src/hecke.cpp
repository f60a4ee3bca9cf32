#include "quiverk/hecke.hpp"

#include <algorithm>

#include "quiverk/errors.hpp"

namespace quiverk {

Permutation hecke_step(const Permutation& w, int i) {
  if (i < 1) throw IndexOutOfRange("generator index must be >= 1");
  if (w(i) > w(i + 1)) return w;
  auto img = w.window(i + 1);
  std::swap(img[i - 1], img[i]);
  return Permutation(std::move(img));
}

Permutation hecke_mul(const Permutation& u, const Permutation& v) {
  Permutation out = u;
  for (int letter : reduced_word(v)) out = hecke_step(out, letter);
  return out;
}

Permutation hecke_mul(std::span<const Permutation> factors) {
  Permutation out;
  for (const auto& f : factors) out = hecke_mul(out, f);
  return out;
}

SignedPerm hecke_word_product(std::span<const int> word) {
  Permutation w;
  for (int letter : word) w = hecke_step(w, letter);
  int excess = static_cast<int>(word.size()) - length(w);
  return {w, excess % 2 == 0 ? 1 : -1};
}

std::vector<std::pair<Permutation, Permutation>> hecke_factor_pairs(const Permutation& w, int k) {
  std::vector<std::pair<Permutation, Permutation>> out;
  if (w.size() > k) return out;
  // Both factors lie below the product in Bruhat order.
  std::vector<Permutation> below;
  for (auto& u : all_permutations(k))
    if (bruhat_leq(u, w)) below.push_back(std::move(u));
  for (const auto& u : below)
    for (const auto& v : below)
      if (hecke_mul(u, v) == w) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quiverk
