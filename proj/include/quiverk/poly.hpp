#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverk {

using Integer = boost::multiprecision::cpp_int;

enum class Alphabet : std::uint8_t { b = 0, a = 1 };

/// A variable a_i or b_i (flat index i >= 1). All b-variables order before all
/// a-variables; within an alphabet variables order by index.
struct VariableId {
  Alphabet alphabet = Alphabet::a;
  int index = 1;

  friend bool operator==(const VariableId&, const VariableId&) = default;
  friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

inline VariableId var_a(int i) { return {Alphabet::a, i}; }
inline VariableId var_b(int i) { return {Alphabet::b, i}; }

/// Largest flat index usable in either alphabet.
inline constexpr int kMaxVariableIndex = 24;

/// A Laurent monomial over the fixed variable set b_1..b_24, a_1..a_24.
class Monomial {
 public:
  static constexpr int kSlots = 2 * kMaxVariableIndex;

  Monomial() { exps_.fill(0); }

  /// Throws IndexOutOfRange for indices outside 1..kMaxVariableIndex.
  static int slot(VariableId v);
  static VariableId variable_at(int slot);

  int exponent(VariableId v) const { return exps_[slot(v)]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  void set_exponent(VariableId v, int e);
  int degree() const { return degree_; }
  bool is_one() const;

  /// Exponent-wise sum / difference; throws on int8 overflow.
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  /// Canonical term order: total degree, then lexicographic on the exponent
  /// vector (b_1, b_2, ..., a_1, a_2, ...).
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
    return x.exps_ <=> y.exps_;
  }
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_; }

  std::size_t hash() const noexcept;

 private:
  std::array<std::int8_t, kSlots> exps_;
  std::int16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Target of a substitution: another variable, or the constant 1.
struct SubstTarget {
  std::optional<VariableId> var;  // nullopt means 1

  static SubstTarget one() { return {}; }
  static SubstTarget to(VariableId v) { return {v}; }
};

using Substitution = std::map<VariableId, SubstTarget>;

/// Integer-coefficient Laurent polynomial in canonical form: terms sorted by
/// the canonical monomial order, no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  static LaurentPoly one() { return LaurentPoly(Integer(1)); }
  static LaurentPoly variable(VariableId v, int exponent = 1);
  static LaurentPoly monomial(const Monomial& m, Integer c = 1);
  /// Canonicalizes arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  /// 1 - numerator/denominator.
  static LaurentPoly one_minus_ratio(VariableId numerator, VariableId denominator);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Coefficient of a monomial (0 if absent).
  Integer coefficient(const Monomial& m) const;

  bool occurs(VariableId v) const;
  std::vector<VariableId> variables() const;

  /// Sum of the terms of total degree d.
  LaurentPoly homogeneous_component(int d) const;
  std::optional<int> min_degree() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(LaurentPoly p, const Integer& c) { return p *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient p / q in the Laurent ring. Throws DivisionByZero when q == 0
/// and NotDivisible when no exact quotient exists.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Simultaneous substitution of variables by variables or by 1.
LaurentPoly substitute(const LaurentPoly& p, const Substitution& s);

/// True iff p is invariant under every adjacent transposition of `vars`.
bool is_symmetric(const LaurentPoly& p, std::span<const VariableId> vars);

/// Renders a variable name; the default produces flat names "a3", "b1".
using VariableNamer = std::function<std::string(VariableId)>;
std::string flat_name(VariableId v);

/// Text form: terms in canonical order, e.g. "1 - b1*b2*a1^-1*a2^-1".
std::string to_text(const LaurentPoly& p, const VariableNamer& name = flat_name);

}  // namespace quiverk
