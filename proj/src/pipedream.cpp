#include "quiverk/pipedream.hpp"

#include <algorithm>
#include <unordered_map>

#include "quiverk/errors.hpp"

namespace quiverk {

namespace {

void check_cell(Cell c, int N) {
  if (c.row < 1 || c.col < 1 || c.row + c.col > N)
    throw OutOfStaircase("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                         ") is outside the staircase of size " + std::to_string(N));
}

// Cells of the staircase (in reading order) that may carry a crossing, with
// the reduced words of the Demazure products of every suffix. A partial
// product `delta` after t cells can still reach w only if delta <= w and
// w <= delta * (product of all remaining letters).
class StaircaseSearch {
 public:
  StaircaseSearch(const Permutation& target, std::vector<Cell> cells)
      : target_(target), cells_(std::move(cells)), suffix_words_(cells_.size() + 1) {
    Permutation suffix;
    for (std::size_t t = cells_.size(); t-- > 0;) {
      suffix = hecke_mul(simple_reflection(letter(t)), suffix);
      suffix_words_[t] = reduced_word(suffix);
    }
  }

  std::size_t steps() const { return cells_.size(); }
  Cell cell(std::size_t t) const { return cells_[t]; }
  int letter(std::size_t t) const { return cells_[t].row + cells_[t].col - 1; }

  // `delta` is the product of the letters taken among the first t cells.
  bool viable(const Permutation& delta, std::size_t t) const {
    if (!bruhat_leq(delta, target_)) return false;
    Permutation reach = delta;
    for (int l : suffix_words_[t]) reach = hecke_step(reach, l);
    return bruhat_leq(target_, reach);
  }

 private:
  Permutation target_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> suffix_words_;
};

std::vector<Cell> allowed_cells(int N, const std::function<bool(Cell)>& allowed) {
  std::vector<Cell> out;
  for (Cell c : reading_order(N))
    if (!allowed || allowed(c)) out.push_back(c);
  return out;
}

void dfs(const StaircaseSearch& s, const Permutation& w, std::size_t t, const Permutation& delta,
         std::vector<Cell>& chosen, int N, std::vector<PipeDream>& out) {
  if (t == s.steps()) {
    if (delta == w) out.emplace_back(N, chosen);
    return;
  }
  Permutation taken = hecke_step(delta, s.letter(t));
  if (s.viable(taken, t + 1)) {
    chosen.push_back(s.cell(t));
    dfs(s, w, t + 1, taken, chosen, N, out);
    chosen.pop_back();
  }
  if (s.viable(delta, t + 1)) dfs(s, w, t + 1, delta, chosen, N, out);
}

std::vector<PipeDream> enumerate_with(const Permutation& w, int N,
                                      const std::function<bool(Cell)>& allowed) {
  std::vector<PipeDream> out;
  if (w.size() > N) return out;
  StaircaseSearch search(w, allowed_cells(N, allowed));
  std::vector<Cell> chosen;
  if (search.viable(Permutation{}, 0)) dfs(search, w, 0, Permutation{}, chosen, N, out);
  std::sort(out.begin(), out.end());
  return out;
}

const Label& label_at(std::span<const Label> labels, int index, const char* what) {
  if (index < 1 || index > static_cast<int>(labels.size()))
    throw IndexOutOfRange(std::string(what) + " label " + std::to_string(index) + " is missing");
  return labels[index - 1];
}

// 1 - side/top with nullopt standing for 1.
LaurentPoly crossing_weight(const Label& top, const Label& side) {
  if (top == side) return {};
  if (top && side) return LaurentPoly::one_minus_ratio(*side, *top);
  if (side) return LaurentPoly::one() - LaurentPoly::variable(*side);
  return LaurentPoly::one() - LaurentPoly::variable(*top, -1);
}

}  // namespace

PipeDream::PipeDream(int N, std::vector<Cell> points) : N_(N), points_(std::move(points)) {
  for (Cell c : points_) check_cell(c, N_);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PipeDream::contains(Cell c) const { return std::binary_search(points_.begin(), points_.end(), c); }

std::vector<Cell> reading_order(int N) {
  std::vector<Cell> out;
  for (int q = 1; q <= N - 1; ++q)
    for (int p = N - q; p >= 1; --p) out.push_back({p, q});
  return out;
}

SignedPerm demazure_of_pipedream(const PipeDream& D) {
  std::vector<int> word;
  for (Cell c : reading_order(D.ambient()))
    if (D.contains(c)) word.push_back(c.row + c.col - 1);
  return hecke_word_product(word);
}

std::vector<PipeDream> enumerate_pipedreams(const Permutation& w, int N) {
  return enumerate_with(w, N, {});
}

std::vector<PipeDream> enumerate_pipedreams_naive(const Permutation& w, int N) {
  if (N > 5) throw IndexOutOfRange("naive pipe dream enumeration is limited to N <= 5");
  auto cells = reading_order(N);
  std::vector<PipeDream> out;
  for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
    std::vector<Cell> pts;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask & (1u << k)) pts.push_back(cells[k]);
    PipeDream D(N, std::move(pts));
    if (demazure_of_pipedream(D).perm == w) out.push_back(std::move(D));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly pipedream_weight(const PipeDream& D, std::span<const VariableId> top,
                             std::span<const VariableId> side) {
  LaurentPoly out = LaurentPoly::one();
  for (Cell c : D.points()) {
    if (c.col > static_cast<int>(top.size()) || c.row > static_cast<int>(side.size()))
      throw IndexOutOfRange("not enough labels for cell (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ")");
    out *= LaurentPoly::one_minus_ratio(side[c.row - 1], top[c.col - 1]);
  }
  return out;
}

LaurentPoly fk_coefficient(const Permutation& w, int N,
                           const std::function<LaurentPoly(Cell)>& weight) {
  if (w.size() > N) return {};
  std::vector<Cell> cells;
  std::vector<LaurentPoly> weights;
  for (Cell c : reading_order(N)) {
    auto h = weight(c);
    if (h.is_zero()) continue;
    cells.push_back(c);
    weights.push_back(std::move(h));
  }
  StaircaseSearch search(w, cells);
  if (!search.viable(Permutation{}, 0)) return {};

  // Coefficients of the partial FK-product, keyed by Demazure product.
  std::unordered_map<Permutation, LaurentPoly> states{{Permutation{}, LaurentPoly::one()}};
  for (std::size_t t = 0; t < search.steps(); ++t) {
    std::unordered_map<Permutation, LaurentPoly> next;
    int letter = search.letter(t);
    for (auto& [delta, coeff] : states) {
      Permutation taken = hecke_step(delta, letter);
      if (search.viable(taken, t + 1)) {
        LaurentPoly term = coeff * weights[t];
        if (taken == delta) term = -term;
        next[taken] += term;
      }
      if (search.viable(delta, t + 1)) next[delta] += coeff;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  auto it = states.find(w);
  return it == states.end() ? LaurentPoly{} : it->second;
}

LaurentPoly fk_coefficient(const Permutation& w, int N, std::span<const Label> top,
                           std::span<const Label> side, const std::function<bool(Cell)>& allowed) {
  return fk_coefficient(w, N, [&](Cell c) -> LaurentPoly {
    if (allowed && !allowed(c)) return {};
    return crossing_weight(label_at(top, c.col, "top"), label_at(side, c.row, "side"));
  });
}

LaurentPoly groth_via_pipedreams(const Permutation& w, int N) {
  std::vector<Label> top, side;
  for (int i = 1; i <= N; ++i) {
    top.push_back(var_a(i));
    side.push_back(var_b(i));
  }
  return fk_coefficient(w, N, top, side);
}

bool is_restricted_cell(Cell c, const DimensionVector& e) {
  int n = static_cast<int>(e.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (c.row > prefix_dim(e, i - 1) && c.col > suffix_dim(e, i + 1)) return false;
  return true;
}

std::vector<PipeDream> enumerate_restricted(const Permutation& w, const DimensionVector& e) {
  return enumerate_with(w, total_dim(e), [&e](Cell c) { return is_restricted_cell(c, e); });
}

LaurentPoly groth_restricted(const Permutation& w, const DimensionVector& e) {
  auto top = as_labels(reversed_block_labels(Alphabet::a, e));
  auto side = as_labels(block_labels(Alphabet::a, e));
  return fk_coefficient(w, total_dim(e), top, side,
                        [&e](Cell c) { return is_restricted_cell(c, e); });
}

std::string render_ascii(const PipeDream& D) {
  std::string out;
  int N = D.ambient();
  for (int p = 1; p < N; ++p) {
    for (int q = 1; p + q <= N; ++q) out += D.contains({p, q}) ? '+' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace quiverk
