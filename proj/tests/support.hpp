// Helpers and brute-force oracles shared by the unit tests. Nothing here calls
// into the library code paths it is used to check.
#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "quiverk/groth.hpp"
#include "quiverk/hecke.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/pipedream.hpp"
#include "quiverk/poly.hpp"
#include "quiverk/quiver.hpp"

namespace qt {

using namespace quiverk;

inline Permutation P(const char* s) { return Permutation::from_string(s); }

inline LaurentPoly A(int i, int k = 1) { return LaurentPoly::variable(var_a(i), k); }
inline LaurentPoly B(int i, int k = 1) { return LaurentPoly::variable(var_b(i), k); }
inline LaurentPoly C(long long c) { return LaurentPoly(Integer(c)); }
inline LaurentPoly one_minus(VariableId num, VariableId den) { return LaurentPoly::one_minus_ratio(num, den); }

inline RankConditions ranks(DimensionVector e, std::vector<std::vector<int>> upper) {
  return validate_ranks(std::move(e), std::move(upper));
}

// One-line images padded to N.
inline std::vector<int> images(const Permutation& w, int N) {
  std::vector<int> v(N);
  for (int i = 1; i <= N; ++i) v[i - 1] = w(i);
  return v;
}

inline int inversions(const Permutation& w, int N) {
  auto v = images(w, N);
  int c = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) c += v[i] > v[j];
  return c;
}

inline std::vector<Permutation> perms_of(int N) {
  std::vector<int> v(N);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Permutation random_perm(int N, std::mt19937_64& rng) {
  std::vector<int> v(N);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Tableau criterion: u <= w iff for every k the sorted first k images of u
// are entrywise at most those of w.
inline bool bruhat_oracle(const Permutation& u, const Permutation& w, int N) {
  auto x = images(u, N), y = images(w, N);
  for (int k = 1; k <= N; ++k) {
    std::vector<int> a(x.begin(), x.begin() + k), b(y.begin(), y.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

// Demazure product as the Bruhat-maximum of {x*y : x <= u, y <= v}.
inline Permutation demazure_oracle(const Permutation& u, const Permutation& v, int N) {
  std::vector<Permutation> below_u, below_v;
  for (const auto& x : perms_of(N)) {
    if (bruhat_oracle(x, u, N)) below_u.push_back(x);
    if (bruhat_oracle(x, v, N)) below_v.push_back(x);
  }
  std::set<Permutation> prods;
  for (const auto& x : below_u)
    for (const auto& y : below_v) prods.insert(x * y);
  for (const auto& m : prods)
    if (std::all_of(prods.begin(), prods.end(), [&](const Permutation& p) { return bruhat_oracle(p, m, N); }))
      return m;
  return {};
}

// Evaluates a word in the algebra with T_w s_i = T_{w s_i} if the length goes
// up and -T_w otherwise, tracking the full linear combination.
inline std::map<Permutation, int> free_algebra_word(const std::vector<int>& word, int N) {
  std::map<Permutation, int> cur{{Permutation(), 1}};
  for (int i : word) {
    std::map<Permutation, int> next;
    Permutation s = simple_reflection(i);
    for (const auto& [w, c] : cur) {
      Permutation ws = w * s;
      if (inversions(ws, N) > inversions(w, N))
        next[ws] += c;
      else
        next[w] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

// Semistandard tableaux of shape lambda and content mu, counted directly.
inline long long ssyt_count(const Partition& lambda, const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.push_back({r, c});
  std::vector<std::vector<int>> T(lambda.rows());
  for (int r = 0; r < lambda.rows(); ++r) T[r].assign(lambda[r], 0);
  std::vector<int> left(mu.parts().begin(), mu.parts().end());
  long long count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && T[r][c - 1] > v) continue;
      if (r > 0 && T[r - 1][c] >= v) continue;
      T[r][c] = v;
      --left[v - 1];
      self(self, k + 1);
      ++left[v - 1];
    }
  };
  rec(rec, 0);
  return count;
}

// Small random Laurent polynomials in b1..b3, a1..a3.
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-3, 3), bexp(0, 2), aexp(-2, 2);
  LaurentPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m;
    for (int i = 1; i <= 3; ++i) {
      m.set_exponent(var_b(i), bexp(rng));
      m.set_exponent(var_a(i), aexp(rng));
    }
    p += LaurentPoly::monomial(m, Integer(coeff(rng)));
  }
  return p;
}

inline std::vector<RankConditions> family(int max_n, int max_e) { return rank_family(max_n, max_e); }

}  // namespace qt
