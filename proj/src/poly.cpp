#include "quiverk/poly.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <unordered_map>

#include "quiverk/errors.hpp"

namespace quiverk {

namespace {

std::int8_t checked_exponent(int e) {
  if (e < std::numeric_limits<std::int8_t>::min() || e > std::numeric_limits<std::int8_t>::max())
    throw IndexOutOfRange("monomial exponent out of range");
  return static_cast<std::int8_t>(e);
}

using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  return out;
}

}  // namespace

int Monomial::slot(VariableId v) {
  if (v.index < 1 || v.index > kMaxVariableIndex)
    throw IndexOutOfRange("variable index " + std::to_string(v.index) + " outside 1.." +
                          std::to_string(kMaxVariableIndex));
  return (v.alphabet == Alphabet::b ? 0 : kMaxVariableIndex) + v.index - 1;
}

VariableId Monomial::variable_at(int slot) {
  if (slot < kMaxVariableIndex) return var_b(slot + 1);
  return var_a(slot - kMaxVariableIndex + 1);
}

void Monomial::set_exponent(VariableId v, int e) {
  int s = slot(v);
  degree_ = static_cast<std::int16_t>(degree_ - exps_[s] + e);
  exps_[s] = checked_exponent(e);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int8_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  for (int s = 0; s < kSlots; ++s) out.exps_[s] = checked_exponent(exps_[s] + o.exps_[s]);
  out.degree_ = static_cast<std::int16_t>(degree_ + o.degree_);
  return out;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial out;
  for (int s = 0; s < kSlots; ++s) out.exps_[s] = checked_exponent(exps_[s] - o.exps_[s]);
  out.degree_ = static_cast<std::int16_t>(degree_ - o.degree_);
  return out;
}

std::size_t Monomial::hash() const noexcept {
  static_assert(kSlots % 8 == 0);
  std::uint64_t words[kSlots / 8];
  std::memcpy(words, exps_.data(), kSlots);
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

LaurentPoly::LaurentPoly(Integer constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, std::move(constant)});
}

LaurentPoly LaurentPoly::variable(VariableId v, int exponent) {
  Monomial m;
  m.set_exponent(v, exponent);
  return monomial(m);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, Integer c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  LaurentPoly p;
  p.terms_ = drain(acc);
  return p;
}

LaurentPoly LaurentPoly::one_minus_ratio(VariableId numerator, VariableId denominator) {
  if (numerator == denominator) return {};
  Monomial m;
  m.set_exponent(numerator, 1);
  m.set_exponent(denominator, -1);
  LaurentPoly p;
  p.terms_.push_back({Monomial{}, 1});
  p.terms_.push_back({m, -1});
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

bool LaurentPoly::occurs(VariableId v) const {
  int s = Monomial::slot(v);
  return std::any_of(terms_.begin(), terms_.end(),
                     [s](const Term& t) { return t.monomial.exponent_at(s) != 0; });
}

std::vector<VariableId> LaurentPoly::variables() const {
  std::vector<VariableId> out;
  for (int s = 0; s < Monomial::kSlots; ++s)
    for (const auto& t : terms_)
      if (t.monomial.exponent_at(s) != 0) {
        out.push_back(Monomial::variable_at(s));
        break;
      }
  return out;
}

LaurentPoly LaurentPoly::homogeneous_component(int d) const {
  LaurentPoly out;
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) out.terms_.push_back(t);
  return out;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->monomial < j->monomial)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->monomial < i->monomial) {
      merged.push_back(*j++);
    } else {
      Integer c = i->coeff + j->coeff;
      if (!c.is_zero()) merged.push_back({i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (q.is_one()) return p;
  if (p.is_one()) return q;
  Accumulator acc;
  acc.reserve(p.size() * q.size());
  for (const auto& x : p.terms_)
    for (const auto& y : q.terms_) acc[x.monomial * y.monomial] += x.coeff * y.coeff;
  LaurentPoly out;
  out.terms_ = drain(acc);
  return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  if (p.is_zero()) return {};
  if (q.is_one()) return p;

  // Per-variable exponent window any exact quotient must live in.
  std::array<int, Monomial::kSlots> lo{}, hi{};
  for (int s = 0; s < Monomial::kSlots; ++s) {
    auto range = [s](const LaurentPoly& f) {
      int mn = std::numeric_limits<int>::max(), mx = std::numeric_limits<int>::min();
      for (const auto& t : f.terms()) {
        mn = std::min(mn, t.monomial.exponent_at(s));
        mx = std::max(mx, t.monomial.exponent_at(s));
      }
      return std::pair{mn, mx};
    };
    auto [pmin, pmax] = range(p);
    auto [qmin, qmax] = range(q);
    lo[s] = pmin - qmin;
    hi[s] = pmax - qmax;
    if (lo[s] > hi[s]) throw NotDivisible("exponent ranges are incompatible");
  }

  // Leading terms multiply under the graded-lex group order, so the leading
  // term of the remainder fixes the next quotient term.
  const Term& lead_q = q.terms().back();
  std::map<Monomial, Integer> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.monomial, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (top->second % lead_q.coeff != 0) throw NotDivisible("leading coefficient does not divide");
    Monomial m = top->first / lead_q.monomial;
    for (int s = 0; s < Monomial::kSlots; ++s)
      if (m.exponent_at(s) < lo[s] || m.exponent_at(s) > hi[s])
        throw NotDivisible("quotient term leaves the admissible exponent window");
    Integer c = top->second / lead_q.coeff;
    for (const auto& t : q.terms()) {
      auto key = m * t.monomial;
      auto [it, inserted] = rem.try_emplace(key, 0);
      it->second -= c * t.coeff;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.push_back({m, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s) {
  if (s.empty()) return p;
  struct Rule {
    int from;
    int to;  // -1 means the constant 1
  };
  std::vector<Rule> rules;
  for (const auto& [from, target] : s)
    rules.push_back({Monomial::slot(from), target.var ? Monomial::slot(*target.var) : -1});
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    for (const auto& r : rules) m.set_exponent(Monomial::variable_at(r.from), 0);
    for (const auto& r : rules) {
      int e = t.monomial.exponent_at(r.from);
      if (e == 0 || r.to < 0) continue;
      auto v = Monomial::variable_at(r.to);
      m.set_exponent(v, m.exponent(v) + e);
    }
    out.push_back({m, t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

bool is_symmetric(const LaurentPoly& p, std::span<const VariableId> vars) {
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    Substitution swap{{vars[i], SubstTarget::to(vars[i + 1])}, {vars[i + 1], SubstTarget::to(vars[i])}};
    if (substitute(p, swap) != p) return false;
  }
  return true;
}

std::string flat_name(VariableId v) {
  return (v.alphabet == Alphabet::a ? "a" : "b") + std::to_string(v.index);
}

std::string to_text(const LaurentPoly& p, const VariableNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string factors;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      int e = t.monomial.exponent_at(s);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += name(Monomial::variable_at(s));
      if (e != 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty())
      out += mag.str();
    else if (mag == 1)
      out += factors;
    else
      out += mag.str() + "*" + factors;
  }
  return out;
}

}  // namespace quiverk
