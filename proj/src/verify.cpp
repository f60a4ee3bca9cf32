#include "quiverk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "quiverk/errors.hpp"
#include "quiverk/hecke.hpp"

namespace quiverk {

namespace {

class Checker {
 public:
  Checker(const RankConditions& r, std::string prefix) : r_(r), prefix_(std::move(prefix)) {}

  void expect(bool ok, const std::string& identity, const std::string& diagnostic = {}) {
    if (!ok) failures_.push_back({r_, prefix_ + identity, diagnostic});
  }

  std::vector<VerifyFailure> take() { return std::move(failures_); }

 private:
  const RankConditions& r_;
  std::string prefix_;
  std::vector<VerifyFailure> failures_;
};

std::vector<VariableId> block(Alphabet alphabet, const DimensionVector& e, int i) {
  std::vector<VariableId> out;
  for (int j = 1; j <= e[i]; ++j) out.push_back(block_var(alphabet, e, i, j));
  return out;
}

std::string show(const Permutation& w) { return w.to_string(); }

std::string show(const LaurentPoly& p, const DimensionVector& e) {
  std::string s = to_text(p, blocked_namer(e));
  return s.size() > 200 ? s.substr(0, 200) + "..." : s;
}

bool subset_of(const std::vector<int>& xs, const std::set<int>& allowed) {
  return std::all_of(xs.begin(), xs.end(), [&](int x) { return allowed.count(x) > 0; });
}

// Properties (i)-(iii) characterizing z(r).
bool zel_conditions(const RankConditions& r, const Permutation& z) {
  int n = r.n();
  std::set<int> right, left;
  for (int j = 1; j <= n; ++j) right.insert(r(n, j));
  for (int i = 0; i < n; ++i) left.insert(r(i, 0));
  if (!subset_of(descents(z), right) || !subset_of(descents(inverse(z)), left)) return false;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      int count = 0;
      for (int p = 1; p <= r(n, j); ++p)
        if (z(p) <= r(i, 0)) ++count;
      if (count != r(i, j)) return false;
    }
  return true;
}

void check_zelprop(const RankConditions& r, Checker& c) {
  int n = r.n();
  Permutation z = conj_zelevinsky(r);
  Permutation prod = conj_zelevinsky_product(r);
  c.expect(z == prod, "closed-form", "closed form " + show(z) + " vs product " + show(prod));
  int total = 0;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < n; ++i) total += length(W_perm(r, i, j));
  c.expect(total == length(prod), "reduced-product",
           "sum of block lengths " + std::to_string(total) + " vs " + std::to_string(length(prod)));
  std::set<int> right, left;
  for (int j = 1; j <= n; ++j) right.insert(r(n, j));
  for (int i = 0; i < n; ++i) left.insert(r(i, 0));
  c.expect(subset_of(descents(z), right), "descents", "z = " + show(z));
  c.expect(subset_of(descents(inverse(z)), left), "inverse-descents", "z = " + show(z));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      int count = 0;
      for (int p = 1; p <= r(n, j); ++p)
        if (z(p) <= r(i, 0)) ++count;
      c.expect(count == r(i, j), "rank-count",
               "(" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(count) + " vs " +
                   std::to_string(r(i, j)));
    }
  Permutation mirrored = conj_zelevinsky(mirror_ranks(r));
  c.expect(inverse(z) == mirrored, "mirror", show(inverse(z)) + " vs " + show(mirrored));
  if (r.N() <= 5) {
    int matches = 0;
    for (const auto& w : all_permutations(r.N()))
      if (zel_conditions(r, w)) ++matches;
    c.expect(matches == 1, "uniqueness", std::to_string(matches) + " permutations satisfy (i)-(iii)");
  }
}

void check_length(const RankConditions& r, Checker& c) {
  int n = r.n();
  const auto& e = r.dims();
  int formula = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) formula += (r(i, j - 1) - r(i, j)) * (r(i + 1, j) - r(i, j));
  int len = length(conj_zelevinsky(r));
  c.expect(len == formula, "length-formula", std::to_string(len) + " vs " + std::to_string(formula));
  int pairs = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) pairs += e[i] * e[j];
  PipeDream De = minimal_dream(e);
  Permutation ze = zelevinsky(maximal_ranks(e));
  c.expect(static_cast<int>(De.size()) == pairs && length(ze) == pairs, "minimal-dream-size",
           "|D_e| = " + std::to_string(De.size()) + ", l = " + std::to_string(length(ze)) + ", sum = " +
               std::to_string(pairs));
  auto dreams = enumerate_pipedreams(ze, r.N());
  c.expect(dreams.size() == 1 && dreams[0] == De, "minimal-dream-unique",
           std::to_string(dreams.size()) + " pipe dreams");
  int codim = length(zelevinsky(r)) - length(ze);
  c.expect(codim == rank_stats(r).d, "codimension",
           std::to_string(codim) + " vs d = " + std::to_string(rank_stats(r).d));
}

void check_component(const RankConditions& r, Checker& c) {
  const auto& e = r.dims();
  int N = r.N();
  LaurentPoly lhs = ratio_poly(r);
  LaurentPoly rhs = component_rhs(r);
  c.expect(lhs == rhs, "component", show(lhs, e) + " vs " + show(rhs, e));

  auto top = as_labels(reversed_block_labels(Alphabet::a, e));
  auto side = as_labels(block_labels(Alphabet::a, e));
  Permutation zh = zelevinsky(r);
  LaurentPoly full = fk_coefficient(zh, N, top, side);
  LaurentPoly restricted = groth_restricted(zh, e);
  c.expect(full == restricted, "restricted", show(full, e) + " vs " + show(restricted, e));
  for (int i = 0; i <= r.n(); ++i) {
    auto vars = block(Alphabet::a, e, i);
    c.expect(is_symmetric(full, vars), "block-symmetry", "block " + std::to_string(i));
  }
  std::vector<Label> flipped;
  for (int i = r.n(); i >= 0; --i) {
    auto vars = block(Alphabet::a, e, i);
    flipped.insert(flipped.end(), vars.rbegin(), vars.rend());
  }
  c.expect(fk_coefficient(zh, N, flipped, side) == full, "within-block-order");
}

void check_stable(const RankConditions& r, Checker& c) {
  const auto& e = r.dims();
  LaurentPoly lhs = ratio_poly(r);
  LaurentPoly rhs = stable_component_rhs(r);
  c.expect(lhs == rhs, "stable-component", show(lhs, e) + " vs " + show(rhs, e));
  auto coeffs = quiver_coefficients(r);
  LaurentPoly exp = quiver_expansion(r, coeffs, false);
  c.expect(lhs == exp, "stable-expansion", show(lhs, e) + " vs " + show(exp, e));
}

void check_biject(const RankConditions& r, Checker& c) {
  const auto& e = r.dims();
  auto kms = enumerate_kms(r, KmsMethod::facseq);
  auto restricted = enumerate_restricted(zelevinsky(r), e);
  std::set<PipeDream> image;
  std::size_t produced = 0;
  for (const auto& w : kms) {
    c.expect(is_kms(r, w), "is-kms");
    std::vector<std::vector<PipeDream>> per(r.n());
    for (int i = 1; i <= r.n(); ++i) {
      c.expect(is_partial_permutation(w[i - 1], e[i - 1], e[i]), "partial", show(w[i - 1]));
      per[i - 1] = enumerate_pipedreams(w[i - 1], e[i - 1] + e[i]);
    }
    if (std::any_of(per.begin(), per.end(), [](const auto& v) { return v.empty(); })) continue;
    std::vector<std::size_t> choice(r.n(), 0);
    while (true) {
      std::vector<PipeDream> tuple;
      for (int i = 0; i < r.n(); ++i) tuple.push_back(per[i][choice[i]]);
      try {
        PipeDream D = phi_hat(r, tuple);
        ++produced;
        image.insert(D);
        auto back = split_restricted(r, D);
        c.expect(back && *back == tuple, "phi-inverse");
      } catch (const BlockOverflow& ex) {
        c.expect(false, "block-overflow", ex.what());
      }
      int k = r.n() - 1;
      while (k >= 0 && ++choice[k] == per[k].size()) choice[k--] = 0;
      if (k < 0) break;
    }
  }
  c.expect(produced == restricted.size(), "count",
           std::to_string(produced) + " tuples vs " + std::to_string(restricted.size()) + " restricted dreams");
  c.expect(image.size() == produced, "injective");
  c.expect(std::set<PipeDream>(restricted.begin(), restricted.end()) == image, "image");
}

void check_kms_stab(const RankConditions& r, Checker& c) {
  auto base = enumerate_kms(r, KmsMethod::facseq);
  c.expect(base == enumerate_kms(r, KmsMethod::pipedream), "pipedream-method");
  c.expect(base == enumerate_kms(r, KmsMethod::moves), "moves-method");
  for (int m = 1; m <= 2; ++m) {
    std::set<KmsFactorization> expect;
    for (const auto& w : base) {
      KmsFactorization s;
      for (const auto& x : w) s.push_back(embed_shift(x, m));
      expect.insert(std::move(s));
    }
    auto shifted = enumerate_kms(shift_ranks(r, m), KmsMethod::facseq);
    c.expect(std::set<KmsFactorization>(shifted.begin(), shifted.end()) == expect,
             "shift-" + std::to_string(m), std::to_string(shifted.size()) + " vs " + std::to_string(expect.size()));
  }
}

void check_supersym(const RankConditions& r, Checker& c) {
  const auto& e = r.dims();
  int n = r.n();
  LaurentPoly K = double_quiver_poly(r);
  for (int i = 0; i < n; ++i) {
    VariableId a1 = block_var(Alphabet::a, e, i + 1, 1);
    VariableId b1 = block_var(Alphabet::b, e, i, 1);
    LaurentPoly s = substitute(K, {{a1, SubstTarget::to(b1)}});
    c.expect(!s.occurs(b1), "multisuper", "block " + std::to_string(i));
  }
  for (int i = 0; i <= n; ++i) {
    c.expect(is_symmetric(K, block(Alphabet::a, e, i)), "a-symmetry", "block " + std::to_string(i));
    c.expect(is_symmetric(K, block(Alphabet::b, e, i)), "b-symmetry", "block " + std::to_string(i));
  }
  for (VariableId v : block(Alphabet::a, e, 0)) c.expect(!K.occurs(v), "a0-absent");
  for (VariableId v : block(Alphabet::b, e, n)) c.expect(!K.occurs(v), "bn-absent");
}

void check_rankstab(const RankConditions& r, Checker& c) {
  const auto& e = r.dims();
  int n = r.n(), N = r.N();
  RankConditions up = shift_ranks(r, 1);
  const auto& f = up.dims();
  // Fresh variables c_1..c_n, named after the unused b-indices past N.
  auto fresh = [N](int i) { return var_b(N + i); };
  Substitution s;
  for (int j = 1; j <= e[0]; ++j) s[block_var(Alphabet::a, f, 0, j)] = SubstTarget::to(block_var(Alphabet::a, e, 0, j));
  s[block_var(Alphabet::a, f, 0, f[0])] = SubstTarget::one();
  for (int i = 1; i <= n; ++i) {
    s[block_var(Alphabet::a, f, i, 1)] = SubstTarget::to(fresh(i));
    for (int j = 1; j <= e[i]; ++j)
      s[block_var(Alphabet::a, f, i, j + 1)] = SubstTarget::to(block_var(Alphabet::a, e, i, j));
  }
  for (int i = 0; i < n; ++i) {
    s[block_var(Alphabet::b, f, i, 1)] = SubstTarget::to(fresh(i + 1));
    for (int j = 1; j <= e[i]; ++j)
      s[block_var(Alphabet::b, f, i, j + 1)] = SubstTarget::to(block_var(Alphabet::b, e, i, j));
  }
  for (int j = 1; j <= e[n]; ++j) s[block_var(Alphabet::b, f, n, j)] = SubstTarget::to(block_var(Alphabet::b, e, n, j));
  s[block_var(Alphabet::b, f, n, f[n])] = SubstTarget::one();
  // The ratio form of the shifted polynomial blows up past N = 8; the
  // component form is equal to it (checked by the double suite) and stays small.
  LaurentPoly shifted = up.N() <= 8 ? double_quiver_poly(up) : double_component_rhs(up);
  LaurentPoly lhs = substitute(shifted, s);
  LaurentPoly rhs = double_quiver_poly(r);
  c.expect(lhs == rhs, "rank-stability", show(lhs, e) + " vs " + show(rhs, e));
}

void check_double(const RankConditions& r, Checker& c) {
  const auto& e = r.dims();
  LaurentPoly K = double_quiver_poly(r);
  LaurentPoly comp = double_component_rhs(r);
  c.expect(K == comp, "double-component", show(K, e) + " vs " + show(comp, e));
  auto coeffs = quiver_coefficients(r);
  LaurentPoly exp = quiver_expansion(r, coeffs, true);
  c.expect(K == exp, "double-expansion", show(K, e) + " vs " + show(exp, e));
  Substitution b_to_a;
  for (int i = 0; i <= r.n(); ++i)
    for (int j = 1; j <= e[i]; ++j)
      b_to_a[block_var(Alphabet::b, e, i, j)] = SubstTarget::to(block_var(Alphabet::a, e, i, j));
  LaurentPoly spec = substitute(exp, b_to_a);
  LaurentPoly ratio = ratio_poly(r);
  c.expect(spec == ratio, "specialization", show(spec, e) + " vs " + show(ratio, e));
}

void check_signs(const RankConditions& r, Checker& c) {
  int d = rank_stats(r).d;
  for (const auto& [mu, coeff] : quiver_coefficients(r)) {
    int weight = 0;
    for (const auto& p : mu) weight += p.weight();
    Integer signed_c = (weight - d) % 2 == 0 ? coeff : Integer(-coeff);
    c.expect(signed_c >= 0, "quiver-sign", "coefficient " + coeff.str());
  }
  for (const auto& w : enumerate_kms(r, KmsMethod::facseq))
    for (const auto& x : w)
      for (const auto& [lambda, coeff] : expand_stable(x)) {
        Integer signed_c = (lambda.weight() - length(x)) % 2 == 0 ? coeff : Integer(-coeff);
        c.expect(signed_c >= 0, "stable-sign", show(x) + " " + lambda.to_string());
      }
}

using CheckFn = void (*)(const RankConditions&, Checker&);

const std::map<std::string, CheckFn>& checks() {
  static const std::map<std::string, CheckFn> table{
      {"zelprop", check_zelprop},   {"length", check_length},     {"component", check_component},
      {"stable", check_stable},     {"biject", check_biject},     {"kms-stab", check_kms_stab},
      {"supersym", check_supersym}, {"rankstab", check_rankstab}, {"double", check_double},
      {"signs", check_signs},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"zelprop", "length",   "component", "stable",  "biject",
                                              "kms-stab", "supersym", "rankstab",  "double", "signs"};
  return names;
}

std::vector<RankConditions> verify_instances(const VerifyOptions& opts) {
  if (opts.max_n < 1 || opts.max_e < 1) throw MalformedInput("--max-n and --max-e must be positive");
  std::vector<RankConditions> out;
  std::uint64_t samples = opts.count;
  if (rank_family_size(opts.max_n, opts.max_e, kExhaustiveLimit) <= kExhaustiveLimit)
    out = rank_family(opts.max_n, opts.max_e);
  else if (samples == 0)
    samples = kDefaultSamples;
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    int n = std::uniform_int_distribution<int>(1, opts.max_n)(rng);
    out.push_back(random_rank_conditions(n, opts.max_e, rng));
  }
  return out;
}

std::vector<VerifyFailure> check_instance(const std::string& suite, const RankConditions& r) {
  std::vector<std::string> run;
  if (suite == "all")
    run = suite_names();
  else if (checks().count(suite))
    run = {suite};
  else
    throw MalformedInput("unknown suite \"" + suite + "\"");
  std::vector<VerifyFailure> out;
  for (const auto& name : run) {
    Checker c(r, suite == "all" ? name + "/" : "");
    try {
      checks().at(name)(r, c);
    } catch (const std::exception& ex) {
      c.expect(false, "exception", ex.what());
    }
    auto f = c.take();
    out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  }
  return out;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QUIVERK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

VerifyReport run_suite(const std::string& suite, const std::vector<RankConditions>& instances, unsigned threads) {
  if (suite != "all" && !checks().count(suite)) throw MalformedInput("unknown suite \"" + suite + "\"");
  std::vector<std::vector<VerifyFailure>> per(instances.size());
  parallel_for(instances.size(), threads, [&](std::size_t i) { per[i] = check_instance(suite, instances[i]); });
  VerifyReport report;
  report.suite = suite;
  report.instances = instances.size();
  for (auto& f : per) report.failures.insert(report.failures.end(), f.begin(), f.end());
  return report;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  return run_suite(suite, verify_instances(opts), opts.threads);
}

}  // namespace quiverk
