#include "quiverk/groth.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "quiverk/errors.hpp"
#include "quiverk/labels.hpp"
#include "quiverk/pipedream.hpp"

namespace quiverk {

namespace {

// Total degree past which the peeling loop gives up.
constexpr int kMaxPeelDegree = 40;
// How many variable counts past the initial one expand_stable tries.
constexpr int kMaxExtraVariables = 4;

struct LsCache {
  std::mutex mu;
  std::map<int, std::unordered_map<Permutation, LaurentPoly>> by_size;
};

LsCache& ls_cache() {
  static LsCache cache;
  return cache;
}

LaurentPoly groth_ls_rec(const Permutation& w, int N) {
  auto& cache = ls_cache();
  {
    std::lock_guard lock(cache.mu);
    auto& table = cache.by_size[N];
    if (auto it = table.find(w); it != table.end()) return it->second;
  }
  LaurentPoly out;
  int ascent = 0;
  for (int i = 1; i < N; ++i)
    if (w(i) < w(i + 1)) {
      ascent = i;
      break;
    }
  if (ascent == 0) {
    out = groth_top(N);
  } else {
    int i = ascent;
    LaurentPoly up = groth_ls_rec(w * simple_reflection(i), N);
    LaurentPoly swapped =
        substitute(up, {{var_a(i), SubstTarget::to(var_a(i + 1))}, {var_a(i + 1), SubstTarget::to(var_a(i))}});
    LaurentPoly num = LaurentPoly::variable(var_a(i)) * up - LaurentPoly::variable(var_a(i + 1)) * swapped;
    out = exact_div(num, LaurentPoly::variable(var_a(i)) - LaurentPoly::variable(var_a(i + 1)));
  }
  std::lock_guard lock(cache.mu);
  cache.by_size[N].emplace(w, out);
  return out;
}

LaurentPoly stable_with_labels(const Permutation& w, std::span<const VariableId> top,
                               std::span<const VariableId> side, int m) {
  if (w.is_identity()) return LaurentPoly::one();
  int N = m + w.size();
  std::vector<Label> top_labels(N), side_labels(N);
  for (std::size_t i = 0; i < top.size() && i < top_labels.size(); ++i) top_labels[i] = top[i];
  for (std::size_t i = 0; i < side.size() && i < side_labels.size(); ++i) side_labels[i] = side[i];
  return fk_coefficient(embed_shift(w, m), N, top_labels, side_labels);
}

template <class Key, class Value, class Hash = std::hash<Key>>
struct Memo {
  std::mutex mu;
  std::unordered_map<Key, Value, Hash> table;

  template <class F>
  Value get(const Key& key, F&& compute) {
    {
      std::lock_guard lock(mu);
      if (auto it = table.find(key); it != table.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mu);
    return table.emplace(key, std::move(v)).first->second;
  }
};

struct PermIntHash {
  std::size_t operator()(const std::pair<Permutation, int>& k) const noexcept {
    return std::hash<Permutation>{}(k.first) * 31 + static_cast<std::size_t>(k.second);
  }
};

struct PartitionPairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    std::size_t h = 17;
    for (int x : k.first.parts()) h = h * 131 + static_cast<std::size_t>(x);
    h = h * 131 + 7;
    for (int x : k.second.parts()) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};

// Removes a horizontal strip of size `strip` from lambda in every way, and
// sums the Kostka numbers of the remaining shapes against `rest`.
Integer kostka_strip(const std::vector<int>& lambda, std::size_t row, int strip, std::vector<int>& nu,
                     const Partition& rest) {
  if (row == lambda.size()) return strip == 0 ? kostka(Partition(nu), rest) : Integer(0);
  int below = row + 1 < lambda.size() ? lambda[row + 1] : 0;
  Integer total = 0;
  for (int take = 0; take <= std::min(strip, lambda[row] - below); ++take) {
    nu[row] = lambda[row] - take;
    total += kostka_strip(lambda, row + 1, strip - take, nu, rest);
  }
  return total;
}

// Lowest-degree-first peeling of G_w in k single variables.
StableExpansion peel(const Permutation& w, int k) {
  StableExpansion out;
  LaurentPoly rem = stable_groth_single(w, k);
  while (!rem.is_zero()) {
    int d = *rem.min_degree();
    if (d > kMaxPeelDegree)
      throw StabilizationFailure("expansion of " + w.to_string() + " does not terminate by degree " +
                                 std::to_string(kMaxPeelDegree));
    LaurentPoly low = rem.homogeneous_component(d);
    std::vector<std::pair<Partition, Integer>> found;
    for (const Partition& mu : partitions_of(d, k)) {
      Monomial m;
      for (int i = 0; i < mu.rows(); ++i) m.set_exponent(var_a(i + 1), mu[i]);
      Integer c = low.coefficient(m);
      for (const auto& [lambda, cl] : found) c -= cl * kostka(lambda, mu);
      if (!c.is_zero()) found.emplace_back(mu, std::move(c));
    }
    for (const auto& [lambda, c] : found) {
      rem -= stable_groth_single(grassmannian_for_partition(lambda, lambda.rows()), k) * c;
      out[lambda] += c;
    }
    if (!rem.is_zero() && *rem.min_degree() <= d)
      throw StabilizationFailure("degree " + std::to_string(d) + " part of " + w.to_string() +
                                 " is not symmetric in " + std::to_string(k) + " variables");
  }
  return out;
}

}  // namespace

LaurentPoly groth_top(int N) {
  LaurentPoly out = LaurentPoly::one();
  for (int p = 1; p < N; ++p)
    for (int q = 1; p + q <= N; ++q) out *= LaurentPoly::one_minus_ratio(var_b(p), var_a(q));
  return out;
}

LaurentPoly groth_ls(const Permutation& w, int N) {
  if (w.size() > N) throw WindowTooSmall(w.to_string() + " is not in S_" + std::to_string(N));
  return groth_ls_rec(w, N);
}

LaurentPoly stable_groth(const Permutation& w, int q_vars, int p_vars) {
  return stable_groth(w, q_vars, p_vars, std::max(q_vars, p_vars));
}

LaurentPoly stable_groth(const Permutation& w, int q_vars, int p_vars, int m) {
  std::vector<VariableId> top, side;
  for (int i = 1; i <= q_vars; ++i) top.push_back(var_a(i));
  for (int i = 1; i <= p_vars; ++i) side.push_back(var_b(i));
  return stable_with_labels(w, top, side, m);
}

LaurentPoly stable_groth_labeled(const Permutation& w, std::span<const VariableId> top,
                                 std::span<const VariableId> side) {
  return stable_with_labels(w, top, side, static_cast<int>(std::max(top.size(), side.size())));
}

LaurentPoly stable_groth_partition(const Partition& lambda, int q_vars, int p_vars) {
  return stable_groth(grassmannian_for_partition(lambda, lambda.rows()), q_vars, p_vars);
}

LaurentPoly stable_groth_single(const Permutation& w, int k) {
  static Memo<std::pair<Permutation, int>, LaurentPoly, PermIntHash> memo;
  return memo.get({w, k}, [&] {
    if (w.is_identity()) return LaurentPoly::one();
    return fk_coefficient(embed_shift(w, k), k + w.size(), [k](Cell c) {
      return c.col <= k ? LaurentPoly::variable(var_a(c.col)) : LaurentPoly{};
    });
  });
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  if (mu.empty()) return 1;
  static Memo<std::pair<Partition, Partition>, Integer, PartitionPairHash> memo;
  return memo.get({lambda, mu}, [&] {
    std::vector<int> parts(mu.parts().begin(), mu.parts().end());
    int strip = parts.back();
    parts.pop_back();
    std::vector<int> lam(lambda.parts().begin(), lambda.parts().end());
    std::vector<int> nu(lam.size());
    return kostka_strip(lam, 0, strip, nu, Partition(parts));
  });
}

StableExpansion expand_stable(const Permutation& w) {
  static Memo<Permutation, StableExpansion> memo;
  return memo.get(w, [&] {
    int k0 = length(w) + 2;
    for (int k = k0; k <= k0 + kMaxExtraVariables; ++k) {
      StableExpansion small = peel(w, k);
      StableExpansion big = peel(w, k + 1);
      bool needs_more = false;
      StableExpansion restricted;
      for (const auto& [lambda, c] : big) {
        if (lambda.rows() > k)
          needs_more = true;
        else
          restricted.emplace(lambda, c);
      }
      if (restricted != small)
        throw StabilizationFailure("expansions of " + w.to_string() + " in " + std::to_string(k) + " and " +
                                   std::to_string(k + 1) + " variables disagree");
      if (needs_more) continue;
      int len = length(w);
      for (const auto& [lambda, c] : small)
        if (((lambda.weight() - len) % 2 == 0 ? c : Integer(-c)) < 0)
          throw std::logic_error("alternating sign law fails for " + w.to_string());
      return small;
    }
    throw StabilizationFailure("expansion of " + w.to_string() + " did not stabilize");
  });
}

}  // namespace quiverk
