#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quiverk/hecke.hpp"
#include "quiverk/labels.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/poly.hpp"

namespace quiverk {

/// Crossing position (p, q): row p (side label b_p), column q (top label a_q).
struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A set of crossings inside the staircase p + q <= N. Points are kept sorted
/// by (row, col).
class PipeDream {
 public:
  PipeDream() = default;
  /// Throws OutOfStaircase if a point leaves the staircase of size N.
  PipeDream(int N, std::vector<Cell> points);

  int ambient() const { return N_; }
  std::span<const Cell> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Cell c) const;

  friend bool operator==(const PipeDream& x, const PipeDream& y) { return x.points_ == y.points_; }
  friend std::strong_ordering operator<=>(const PipeDream& x, const PipeDream& y) {
    return x.points_ <=> y.points_;
  }

 private:
  int N_ = 1;
  std::vector<Cell> points_;
};

/// Staircase cells in the south-west to north-east reading order: columns
/// left to right, rows bottom to top inside a column.
std::vector<Cell> reading_order(int N);

/// Absolute Hecke product of s_{p+q-1} over the crossings in reading order.
SignedPerm demazure_of_pipedream(const PipeDream& D);

/// Every pipe dream (reduced or not) in the staircase of size N whose
/// Demazure permutation is w, sorted.
std::vector<PipeDream> enumerate_pipedreams(const Permutation& w, int N);

/// Power-set search used as an oracle for enumerate_pipedreams; N <= 5.
std::vector<PipeDream> enumerate_pipedreams_naive(const Permutation& w, int N);

/// prod over (p,q) in D of (1 - side[p]/top[q]).
LaurentPoly pipedream_weight(const PipeDream& D, std::span<const VariableId> top,
                             std::span<const VariableId> side);

/// Coefficient of w in the FK-product prod (1 + h(P) s_{p+q-1}) over the
/// staircase of size N, taken in reading order. Cells with h(P) == 0 are left
/// out.
LaurentPoly fk_coefficient(const Permutation& w, int N,
                           const std::function<LaurentPoly(Cell)>& weight);

/// Coefficient of w in the FK-product of the staircase diagram of size N whose
/// columns carry `top` labels and rows carry `side` labels. Cells rejected by
/// `allowed` are left out of the product. Crossings whose two labels coincide
/// contribute the factor 1 and are skipped.
LaurentPoly fk_coefficient(const Permutation& w, int N, std::span<const Label> top,
                           std::span<const Label> side,
                           const std::function<bool(Cell)>& allowed = {});

/// The double Grothendieck polynomial G_w(a;b) as the signed weighted sum over
/// pipe dreams.
LaurentPoly groth_via_pipedreams(const Permutation& w, int N);

/// True iff (p,q) satisfies p <= r_{i-1,0} or q <= r_{n,i+1} for every i.
bool is_restricted_cell(Cell c, const DimensionVector& e);

/// Pipe dreams for w whose crossings are all restricted cells for e.
std::vector<PipeDream> enumerate_restricted(const Permutation& w, const DimensionVector& e);

/// G_w(a-breve; a) as the signed sum over restricted pipe dreams of
/// prod (1 - a_p / a-breve_q).
LaurentPoly groth_restricted(const Permutation& w, const DimensionVector& e);

/// '+' for crossings, '.' for the other staircase cells.
std::string render_ascii(const PipeDream& D);

}  // namespace quiverk
