#include "quiverk/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "quiverk/errors.hpp"
#include "quiverk/hecke.hpp"

namespace quiverk {

namespace {

std::string at(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<VariableId> block_vars(Alphabet alphabet, const DimensionVector& e, int i) {
  std::vector<VariableId> out;
  for (int j = 1; j <= e[i]; ++j) out.push_back(block_var(alphabet, e, i, j));
  return out;
}

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Walks every valid filling of the strictly upper entries of a rank table,
// spans in increasing order. Each entry ranges over
// [max(0, r_{i,j-1} + r_{i+1,j} - r_{i+1,j-1}), min(r_{i,j-1}, r_{i+1,j})]
// (lower bound 0 for span one), so every completed table occurs.
void fill_ranks(const DimensionVector& e, std::vector<std::vector<int>>& upper, int span, int i,
                const std::function<void(std::vector<std::vector<int>>&)>& emit, std::mt19937_64* rng) {
  int n = static_cast<int>(e.size()) - 1;
  if (span > n) {
    emit(upper);
    return;
  }
  if (i + span > n) {
    fill_ranks(e, upper, span + 1, 0, emit, rng);
    return;
  }
  int j = i + span;
  auto r = [&](int a, int b) {
    if (a == b) return e[a];
    return upper[a][b - a - 1];
  };
  int hi = std::min(r(i, j - 1), r(i + 1, j));
  int lo = span >= 2 ? std::max(0, r(i, j - 1) + r(i + 1, j) - r(i + 1, j - 1)) : 0;
  if (rng) {
    upper[i][span - 1] = std::uniform_int_distribution<int>(lo, hi)(*rng);
    fill_ranks(e, upper, span, i + 1, emit, rng);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    upper[i][span - 1] = v;
    fill_ranks(e, upper, span, i + 1, emit, rng);
  }
}

std::vector<std::vector<int>> empty_upper(int n) {
  std::vector<std::vector<int>> upper(n);
  for (int i = 0; i < n; ++i) upper[i].assign(n - i, 0);
  return upper;
}

// Calls f on every dimension vector of length n+1 with entries in 1..max_e,
// in lexicographic order.
void for_each_dims(int n, int max_e, const std::function<void(const DimensionVector&)>& f) {
  DimensionVector e(n + 1, 1);
  while (true) {
    f(e);
    int k = n;
    while (k >= 0 && e[k] == max_e) e[k--] = 1;
    if (k < 0) return;
    ++e[k];
  }
}

std::vector<KmsFactorization> kms_facseq(const RankConditions& r) {
  int n = r.n();
  if (n == 1) return {{W_perm(r, 0, 1)}};
  RankConditions r1 = truncate_ranks(r, 1);
  std::set<KmsFactorization> out;
  for (const auto& alpha : kms_facseq(r1)) {
    std::vector<std::vector<std::pair<Permutation, Permutation>>> pairs(n - 1);
    bool possible = true;
    for (int i = 1; i <= n - 1; ++i) {
      pairs[i - 1] = hecke_factor_pairs(alpha[i - 1], r.dims()[i]);
      if (pairs[i - 1].empty()) possible = false;
    }
    if (!possible) continue;
    std::vector<std::size_t> choice(n - 1, 0);
    while (true) {
      KmsFactorization w(n);
      for (int i = 1; i <= n; ++i) {
        Permutation f = W_perm(r, i - 1, i);
        if (i > 1) f = hecke_mul(pairs[i - 2][choice[i - 2]].second, f);
        if (i < n) f = hecke_mul(f, pairs[i - 1][choice[i - 1]].first);
        w[i - 1] = std::move(f);
      }
      out.insert(std::move(w));
      int k = n - 2;
      while (k >= 0 && ++choice[k] == pairs[k].size()) choice[k--] = 0;
      if (k < 0) break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<KmsFactorization> kms_pipedream(const RankConditions& r) {
  std::set<KmsFactorization> out;
  for (const PipeDream& D : enumerate_restricted(zelevinsky(r), r.dims())) {
    auto parts = split_restricted(r, D);
    if (!parts) throw std::logic_error("restricted pipe dream does not split into blocks");
    KmsFactorization w;
    for (const auto& P : *parts) w.push_back(demazure_of_pipedream(P).perm);
    out.insert(std::move(w));
  }
  return {out.begin(), out.end()};
}

bool ascent_pair(const Permutation& left, const Permutation& right, int k) {
  return left(k) < left(k + 1) && inverse(right)(k) < inverse(right)(k + 1);
}

std::vector<KmsFactorization> kms_moves(const RankConditions& r) {
  auto seeds = kms_facseq(r);
  if (seeds.empty()) return {};
  int n = r.n();
  std::set<KmsFactorization> seen{seeds.front()};
  std::deque<KmsFactorization> queue{seeds.front()};
  while (!queue.empty()) {
    KmsFactorization x = std::move(queue.front());
    queue.pop_front();
    for (int j = 1; j < n; ++j) {
      for (int k = 1; k < r.dims()[j]; ++k) {
        Permutation s = simple_reflection(k);
        const Permutation& left = x[j - 1];
        const Permutation& right = x[j];
        bool left_desc = left(k) > left(k + 1);
        bool right_desc = inverse(right)(k) > inverse(right)(k + 1);
        // Bases from which x is one of the three moved sequences.
        std::vector<std::pair<Permutation, Permutation>> bases;
        if (left_desc) bases.emplace_back(left * s, right);
        if (right_desc) bases.emplace_back(left, s * right);
        if (left_desc && right_desc) bases.emplace_back(left * s, s * right);
        for (const auto& [bl, br] : bases) {
          if (!ascent_pair(bl, br, k)) continue;
          for (auto [ml, mr] : {std::pair{bl * s, br}, std::pair{bl, s * br}, std::pair{bl * s, s * br}}) {
            KmsFactorization y = x;
            y[j - 1] = ml;
            y[j] = mr;
            if (seen.insert(y).second) queue.push_back(std::move(y));
          }
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RankConditions::RankConditions(DimensionVector e, std::vector<std::vector<int>> upper)
    : e_(std::move(e)), upper_(std::move(upper)) {
  if (e_.size() < 2) throw MalformedInput("dimension vector needs at least two entries");
  int n = this->n();
  if (static_cast<int>(upper_.size()) != n)
    throw MalformedInput("expected " + std::to_string(n) + " rows of rank conditions, got " +
                         std::to_string(upper_.size()));
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(upper_[i].size()) != n - i)
      throw MalformedInput("rank row " + std::to_string(i) + " must have " + std::to_string(n - i) + " entries");
}

int RankConditions::operator()(int i, int j) const {
  int n = this->n();
  if (i < 0 || j > n) return 0;
  if (j <= i) {
    int s = 0;
    for (int k = std::max(j, 0); k <= std::min(i, n); ++k) s += e_[k];
    return s;
  }
  return upper_[i][j - i - 1];
}

void validate_ranks(const RankConditions& r, bool allow_zero_dims) {
  int n = r.n();
  for (int i = 0; i <= n; ++i) {
    int v = r.dims()[i];
    if (v < 0 || (v == 0 && !allow_zero_dims))
      throw MalformedInput("dimension e_" + std::to_string(i) + " = " + std::to_string(v) + " must be positive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (r(i, j) < 0) throw MalformedInput("negative rank at " + at(i, j));
  for (int span = 1; span <= n; ++span) {
    for (int i = 0; i + span <= n; ++i) {
      int j = i + span;
      if (r(i, j) > std::min(r(i, j - 1), r(i + 1, j)))
        throw NonOccurring("r" + at(i, j) + " = " + std::to_string(r(i, j)) + " exceeds min(r" + at(i, j - 1) +
                           ", r" + at(i + 1, j) + ") at " + at(i, j));
      if (span >= 2 && r(i + 1, j - 1) + r(i, j) < r(i, j - 1) + r(i + 1, j))
        throw NonOccurring("r" + at(i + 1, j - 1) + " + r" + at(i, j) + " < r" + at(i, j - 1) + " + r" +
                           at(i + 1, j) + " at " + at(i, j));
    }
  }
}

RankConditions validate_ranks(DimensionVector e, std::vector<std::vector<int>> upper, bool allow_zero_dims) {
  RankConditions r(std::move(e), std::move(upper));
  validate_ranks(r, allow_zero_dims);
  return r;
}

RankStats rank_stats(const RankConditions& r) {
  RankStats s;
  s.N = r.N();
  for (int i = 0; i < r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j) s.d += (r(i, j - 1) - r(i, j)) * (r(i + 1, j) - r(i, j));
  return s;
}

Permutation W_perm(const RankConditions& r, int i, int j) {
  if (i < 0 || i >= r.n() || j <= 0 || j > r.n())
    throw IndexOutOfRange("W" + at(i, j) + " needs 0 <= i < n and 0 < j <= n");
  int size = r(i + 1, j - 1);
  std::vector<int> img(size);
  for (int p = 1; p <= size; ++p) {
    if (r(i, j) < p && p <= r(i + 1, j))
      img[p - 1] = p + r(i, j - 1) - r(i, j);
    else if (r(i + 1, j) < p && p <= r(i + 1, j) + r(i, j - 1) - r(i, j))
      img[p - 1] = p - r(i + 1, j) + r(i, j);
    else
      img[p - 1] = p;
  }
  return Permutation(std::move(img));
}

Permutation conj_zelevinsky(const RankConditions& r) {
  int n = r.n(), N = r.N();
  std::vector<int> img(N);
  for (int p = 1; p <= N; ++p) {
    int j = 0;
    while (!(r(n, j + 1) < p && p <= r(n, j))) ++j;
    int base = r(n, j + 1);
    bool found = false;
    for (int i = 0; i <= std::min(j + 1, n) && !found; ++i) {
      if (base + r(i - 1, j) - r(i - 1, j + 1) < p && p <= base + r(i, j) - r(i, j + 1)) {
        img[p - 1] = p - base + r(i, j + 1) + r(i - 1, 0) - r(i - 1, j);
        found = true;
      }
    }
    if (!found) throw std::logic_error("closed form for z(r) has no case for p = " + std::to_string(p));
  }
  return Permutation(std::move(img));
}

Permutation conj_zelevinsky_product(const RankConditions& r) {
  Permutation z;
  for (int j = 1; j <= r.n(); ++j)
    for (int i = 0; i < r.n(); ++i) z = z * W_perm(r, i, j);
  return z;
}

Permutation zelevinsky(const RankConditions& r) { return hat(conj_zelevinsky(r), r.N()); }

RankConditions mirror_ranks(const RankConditions& r) {
  int n = r.n();
  DimensionVector e(r.dims().rbegin(), r.dims().rend());
  auto upper = empty_upper(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) upper[i][j - i - 1] = r(n - j, n - i);
  return RankConditions(std::move(e), std::move(upper));
}

RankConditions maximal_ranks(const DimensionVector& e) {
  int n = static_cast<int>(e.size()) - 1;
  auto upper = empty_upper(std::max(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) upper[i][j - i - 1] = *std::min_element(e.begin() + i, e.begin() + j + 1);
  return RankConditions(e, std::move(upper));
}

PipeDream minimal_dream(const DimensionVector& e) {
  int n = static_cast<int>(e.size()) - 1;
  std::vector<Cell> cells;
  for (int i = 1; i <= n - 1; ++i)
    for (int p = 1; p <= prefix_dim(e, i - 1); ++p)
      for (int q = 1; q <= suffix_dim(e, i + 1); ++q) cells.push_back({p, q});
  return PipeDream(total_dim(e), std::move(cells));
}

MinimalData minimal_data(const DimensionVector& e) {
  RankConditions r = maximal_ranks(e);
  Permutation z = conj_zelevinsky(r);
  return {std::move(r), std::move(z), minimal_dream(e)};
}

Permutation delta_perm(const RankConditions& r, int j) {
  int n = r.n();
  if (j < 1 || j > n - 1) throw IndexOutOfRange("delta_" + std::to_string(j) + " needs 1 <= j <= n-1");
  const auto& e = r.dims();
  int size = r(n, j - 1);
  std::vector<int> img(size);
  for (int p = 1; p <= size; ++p) {
    if (p <= e[j])
      img[p - 1] = p;
    else if (p <= r(n, j))
      img[p - 1] = p + e[j - 1];
    else
      img[p - 1] = p - r(n, j + 1);
  }
  return Permutation(std::move(img));
}

Permutation kms_product(const RankConditions& r, std::span<const Permutation> seq) {
  if (static_cast<int>(seq.size()) != r.n())
    throw MalformedInput("expected " + std::to_string(r.n()) + " factors, got " + std::to_string(seq.size()));
  Permutation out;
  for (int i = 1; i <= r.n(); ++i) {
    if (i > 1) out = hecke_mul(out, delta_perm(r, i - 1));
    out = hecke_mul(out, seq[i - 1]);
  }
  return out;
}

bool is_kms(const RankConditions& r, std::span<const Permutation> seq) {
  if (static_cast<int>(seq.size()) != r.n()) return false;
  for (int i = 1; i <= r.n(); ++i)
    if (seq[i - 1].size() > r.dims()[i - 1] + r.dims()[i]) return false;
  return kms_product(r, seq) == conj_zelevinsky(r);
}

std::vector<KmsFactorization> enumerate_kms(const RankConditions& r, KmsMethod method) {
  switch (method) {
    case KmsMethod::facseq:
      return kms_facseq(r);
    case KmsMethod::pipedream:
      return kms_pipedream(r);
    case KmsMethod::moves:
      return kms_moves(r);
  }
  throw std::invalid_argument("unknown KMS method");
}

PipeDream phi_hat(const RankConditions& r, std::span<const PipeDream> dreams) {
  int n = r.n();
  if (static_cast<int>(dreams.size()) != n)
    throw MalformedInput("phi_hat needs " + std::to_string(n) + " pipe dreams");
  const auto& e = r.dims();
  PipeDream base = minimal_dream(e);
  std::vector<Cell> cells(base.points().begin(), base.points().end());
  for (int i = 1; i <= n; ++i) {
    int k = e[i - 1], l = e[i];
    for (Cell c : dreams[i - 1].points()) {
      if (c.row > k || c.col > l)
        throw BlockOverflow("crossing " + at(c.row, c.col) + " of block " + std::to_string(i) + " leaves the " +
                            std::to_string(k) + "x" + std::to_string(l) + " rectangle");
      cells.push_back({k + 1 - c.row + r(i - 2, 0), l + 1 - c.col + r(n, i + 1)});
    }
  }
  return PipeDream(r.N(), std::move(cells));
}

std::optional<std::vector<PipeDream>> split_restricted(const RankConditions& r, const PipeDream& D) {
  int n = r.n();
  const auto& e = r.dims();
  PipeDream base = minimal_dream(e);
  for (Cell c : base.points())
    if (!D.contains(c)) return std::nullopt;
  std::vector<std::vector<Cell>> blocks(n);
  for (Cell c : D.points()) {
    if (base.contains(c)) continue;
    bool placed = false;
    for (int i = 1; i <= n && !placed; ++i) {
      int row0 = r(i - 2, 0), col0 = r(n, i + 1);
      int k = e[i - 1], l = e[i];
      if (c.row > row0 && c.row <= row0 + k && c.col > col0 && c.col <= col0 + l) {
        blocks[i - 1].push_back({k + 1 - (c.row - row0), l + 1 - (c.col - col0)});
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  std::vector<PipeDream> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(e[i - 1] + e[i], std::move(blocks[i - 1]));
  return out;
}

RankConditions shift_ranks(const RankConditions& r, int m) {
  if (m < 0) throw IndexOutOfRange("shift must be non-negative");
  DimensionVector e = r.dims();
  for (int& x : e) x += m;
  auto upper = r.upper();
  for (auto& row : upper)
    for (int& x : row) x += m;
  return RankConditions(std::move(e), std::move(upper));
}

RankConditions truncate_ranks(const RankConditions& r, int k) {
  int n = r.n();
  if (k < 0 || k > n - 1) throw IndexOutOfRange("truncation needs 0 <= k <= n-1");
  int m = n - k;
  DimensionVector e(m + 1);
  for (int i = 0; i <= m; ++i) e[i] = r(i, i + k);
  auto upper = empty_upper(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j <= m; ++j) upper[i][j - i - 1] = r(i, j + k);
  RankConditions out(std::move(e), std::move(upper));
  validate_ranks(out, true);
  return out;
}

LaurentPoly rectangle_groth(const Permutation& w, std::span<const VariableId> top,
                            std::span<const VariableId> side) {
  int N = static_cast<int>(top.size() + side.size());
  if (w.is_identity()) return LaurentPoly::one();
  std::vector<Label> t(N), s(N);
  std::copy(top.begin(), top.end(), t.begin());
  std::copy(side.begin(), side.end(), s.begin());
  return fk_coefficient(w, N, t, s);
}

namespace {

LaurentPoly zelevinsky_ratio(const RankConditions& r, Alphabet side_alphabet) {
  const auto& e = r.dims();
  auto top = as_labels(reversed_block_labels(Alphabet::a, e));
  auto side = as_labels(block_labels(side_alphabet, e));
  LaurentPoly num = fk_coefficient(zelevinsky(r), r.N(), top, side);
  LaurentPoly den = fk_coefficient(zelevinsky(maximal_ranks(e)), r.N(), top, side);
  return exact_div(num, den);
}

enum class FactorKind { ordinary, stable };

LaurentPoly kms_sum(const RankConditions& r, FactorKind kind, Alphabet side_alphabet) {
  const auto& e = r.dims();
  int d = rank_stats(r).d;
  LaurentPoly total;
  for (const auto& w : enumerate_kms(r, KmsMethod::facseq)) {
    LaurentPoly term = LaurentPoly::one();
    int len = 0;
    for (int i = 1; i <= r.n(); ++i) {
      auto top = block_vars(Alphabet::a, e, i);
      auto side = block_vars(side_alphabet, e, i - 1);
      term *= kind == FactorKind::ordinary ? rectangle_groth(w[i - 1], top, side)
                                           : stable_groth_labeled(w[i - 1], top, side);
      len += length(w[i - 1]);
    }
    total += term * Integer(sign_of(len - d));
  }
  return total;
}

}  // namespace

LaurentPoly ratio_poly(const RankConditions& r) { return zelevinsky_ratio(r, Alphabet::a); }

LaurentPoly component_rhs(const RankConditions& r) { return kms_sum(r, FactorKind::ordinary, Alphabet::a); }

LaurentPoly double_quiver_poly(const RankConditions& r) { return zelevinsky_ratio(r, Alphabet::b); }

LaurentPoly double_component_rhs(const RankConditions& r) { return kms_sum(r, FactorKind::stable, Alphabet::b); }

LaurentPoly stable_component_rhs(const RankConditions& r) { return kms_sum(r, FactorKind::stable, Alphabet::a); }

QuiverCoefficients quiver_coefficients(const RankConditions& r) {
  int n = r.n();
  int d = rank_stats(r).d;
  QuiverCoefficients out;
  for (const auto& w : enumerate_kms(r, KmsMethod::facseq)) {
    std::vector<std::vector<std::pair<Partition, Integer>>> exps(n);
    for (int i = 0; i < n; ++i) {
      for (const auto& [lambda, c] : expand_stable(w[i])) exps[i].emplace_back(lambda, abs(c));
      if (exps[i].empty()) break;
    }
    if (std::any_of(exps.begin(), exps.end(), [](const auto& x) { return x.empty(); })) continue;
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      PartitionSeq mu;
      Integer c = 1;
      for (int i = 0; i < n; ++i) {
        mu.push_back(exps[i][choice[i]].first);
        c *= exps[i][choice[i]].second;
      }
      out[mu] += c;
      int k = n - 1;
      while (k >= 0 && ++choice[k] == exps[k].size()) choice[k--] = 0;
      if (k < 0) break;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
      continue;
    }
    int weight = 0;
    for (const auto& p : it->first) weight += p.weight();
    if (sign_of(weight - d) < 0) it->second = -it->second;
    ++it;
  }
  return out;
}

LaurentPoly quiver_expansion(const RankConditions& r, const QuiverCoefficients& c, bool double_form) {
  const auto& e = r.dims();
  LaurentPoly total;
  for (const auto& [mu, coeff] : c) {
    LaurentPoly term = LaurentPoly::one();
    for (int i = 1; i <= r.n(); ++i) {
      const Partition& lambda = mu[i - 1];
      term *= stable_groth_labeled(grassmannian_for_partition(lambda, lambda.rows()),
                                   block_vars(Alphabet::a, e, i),
                                   block_vars(double_form ? Alphabet::b : Alphabet::a, e, i - 1));
    }
    total += term * coeff;
  }
  return total;
}

std::vector<RankConditions> all_rank_conditions(const DimensionVector& e) {
  std::vector<RankConditions> out;
  int n = static_cast<int>(e.size()) - 1;
  auto upper = empty_upper(n);
  fill_ranks(e, upper, 1, 0, [&](auto& u) { out.emplace_back(e, u); }, nullptr);
  return out;
}

std::vector<RankConditions> rank_family(int max_n, int max_e) {
  std::vector<RankConditions> out;
  for (int n = 1; n <= max_n; ++n)
    for_each_dims(n, max_e, [&](const DimensionVector& e) {
      auto part = all_rank_conditions(e);
      out.insert(out.end(), part.begin(), part.end());
    });
  return out;
}

std::uint64_t rank_family_size(int max_n, int max_e, std::uint64_t limit) {
  // Every dimension vector contributes at least one instance.
  std::uint64_t dims = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t c = 1;
    for (int i = 0; i <= n && c <= limit; ++i) c *= static_cast<std::uint64_t>(max_e);
    dims += c;
    if (dims > limit) return limit + 1;
  }
  std::uint64_t count = 0;
  for (int n = 1; n <= max_n && count <= limit; ++n)
    for_each_dims(n, max_e, [&](const DimensionVector& e) {
      if (count > limit) return;
      auto upper = empty_upper(n);
      fill_ranks(e, upper, 1, 0, [&](auto&) { ++count; }, nullptr);
    });
  return limit == UINT64_MAX ? count : std::min(count, limit + 1);
}

RankConditions random_rank_conditions(int n, int max_e, std::mt19937_64& rng) {
  if (n < 1 || max_e < 1) throw IndexOutOfRange("random rank conditions need n >= 1 and max_e >= 1");
  DimensionVector e(n + 1);
  for (int& x : e) x = std::uniform_int_distribution<int>(1, max_e)(rng);
  auto upper = empty_upper(n);
  std::optional<RankConditions> out;
  fill_ranks(e, upper, 1, 0, [&](auto& u) { out.emplace(e, u); }, &rng);
  return *out;
}

}  // namespace quiverk
