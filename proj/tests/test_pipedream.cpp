#include <doctest.h>

#include "quiverk/errors.hpp"
#include "support.hpp"

using namespace qt;

namespace {

PipeDream staircase(int N) {
  std::vector<Cell> cells;
  for (int p = 1; p < N; ++p)
    for (int q = 1; p + q <= N; ++q) cells.push_back({p, q});
  return PipeDream(N, cells);
}

std::vector<VariableId> alphabet(Alphabet x, int N) {
  std::vector<VariableId> v;
  for (int i = 1; i <= N; ++i) v.push_back({x, i});
  return v;
}

// All subsets of the staircase whose Demazure product is w, straight from the
// word of each subset.
std::set<PipeDream> power_set_oracle(const Permutation& w, int N) {
  auto order = reading_order(N);
  std::set<PipeDream> out;
  for (std::uint32_t mask = 0; mask < (1u << order.size()); ++mask) {
    std::vector<int> word;
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < order.size(); ++k)
      if (mask >> k & 1) {
        cells.push_back(order[k]);
        word.push_back(order[k].row + order[k].col - 1);
      }
    Permutation x;
    for (int i : word) x = demazure_oracle(x, simple_reflection(i), N);
    if (x == w) out.insert(PipeDream(N, cells));
  }
  return out;
}

}  // namespace

TEST_CASE("reading order runs columns left to right, rows bottom up") {
  CHECK(reading_order(3) == std::vector<Cell>{{2, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("demazure of a pipe dream") {
  CHECK(demazure_of_pipedream(PipeDream(3, {{1, 1}})) == SignedPerm{P("21"), 1});
  CHECK(demazure_of_pipedream(PipeDream(3, {})) == SignedPerm{Permutation(), 1});
  CHECK(demazure_of_pipedream(staircase(3)) == SignedPerm{P("321"), 1});
  // Word 3,2,1,3 in reading order: (3,1), (2,1), (1,1), then (2,2).
  CHECK(demazure_of_pipedream(PipeDream(4, {{3, 1}, {2, 1}, {1, 1}, {2, 2}})) == SignedPerm{P("4132"), 1});
  // (2,1) then (1,2) reads s2 s2.
  CHECK(demazure_of_pipedream(PipeDream(3, {{2, 1}, {1, 2}})) == SignedPerm{P("132"), -1});
}

TEST_CASE("cells outside the staircase are rejected") {
  CHECK_THROWS_AS(PipeDream(3, {{2, 2}}), OutOfStaircase);
  CHECK_THROWS_AS(PipeDream(3, {{0, 1}}), OutOfStaircase);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_pipedreams(Permutation(), 4) == std::vector<PipeDream>{PipeDream(4, {})});
  CHECK(enumerate_pipedreams(P("321"), 3) == std::vector<PipeDream>{staircase(3)});
  CHECK(enumerate_pipedreams(P("213"), 3) == std::vector<PipeDream>{PipeDream(3, {{1, 1}})});
  CHECK(enumerate_pipedreams(P("132"), 3).size() == 3);
  CHECK(enumerate_pipedreams(P("4321"), 3).empty());
}

TEST_CASE("enumeration matches the power-set oracle") {
  for (int N = 1; N <= 4; ++N)
    for (const auto& w : perms_of(N)) {
      auto got = enumerate_pipedreams(w, N);
      CHECK(std::set<PipeDream>(got.begin(), got.end()) == power_set_oracle(w, N));
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("enumeration matches the naive library enumerator on S_5") {
  for (const auto& w : perms_of(5)) CHECK(enumerate_pipedreams(w, 5) == enumerate_pipedreams_naive(w, 5));
}

TEST_CASE("every pipe dream contains a reduced one") {
  for (const auto& w : perms_of(4))
    for (const auto& D : enumerate_pipedreams(w, 4)) {
      auto pts = D.points();
      std::size_t ell = length(w);
      bool found = false;
      for (std::uint32_t mask = 0; mask < (1u << pts.size()) && !found; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != ell) continue;
        std::vector<Cell> sub;
        for (std::size_t k = 0; k < pts.size(); ++k)
          if (mask >> k & 1) sub.push_back(pts[k]);
        found = demazure_of_pipedream(PipeDream(4, sub)).perm == w;
      }
      CHECK(found);
    }
}

TEST_CASE("weights") {
  auto a = alphabet(Alphabet::a, 3), b = alphabet(Alphabet::b, 3);
  CHECK(pipedream_weight(PipeDream(3, {}), a, b) == LaurentPoly::one());
  CHECK(pipedream_weight(PipeDream(3, {{1, 1}}), a, b) == one_minus(var_b(1), var_a(1)));
  LaurentPoly top = LaurentPoly::one();
  for (int p = 1; p < 3; ++p)
    for (int q = 1; p + q <= 3; ++q) top *= one_minus(var_b(p), var_a(q));
  CHECK(pipedream_weight(staircase(3), a, b) == top);
}

TEST_CASE("grothendieck polynomials from pipe dreams") {
  CHECK(groth_via_pipedreams(P("213"), 2) == one_minus(var_b(1), var_a(1)));
  CHECK(groth_via_pipedreams(Permutation(), 4) == LaurentPoly::one());
  CHECK(groth_via_pipedreams(P("132"), 3) == C(1) - B(1) * B(2) * A(1, -1) * A(2, -1));
}

TEST_CASE("transfer DP equals the explicit weighted sum") {
  auto a = alphabet(Alphabet::a, 5), b = alphabet(Alphabet::b, 5);
  for (int N = 1; N <= 5; ++N)
    for (const auto& w : perms_of(N)) {
      if (N == 5 && length(w) < 7) continue;
      LaurentPoly sum;
      for (const auto& D : enumerate_pipedreams(w, N))
        sum += pipedream_weight(D, a, b) * Integer(demazure_of_pipedream(D).sign);
      CHECK(groth_via_pipedreams(w, N) == sum);
    }
}

TEST_CASE("restricted enumeration") {
  for (DimensionVector e : {DimensionVector{1, 1, 1}, DimensionVector{2, 1, 2}, DimensionVector{1, 2, 1, 1}}) {
    auto data = minimal_data(e);
    CHECK(enumerate_restricted(hat(data.z, total_dim(e)), e) == std::vector<PipeDream>{data.dream});
    CHECK(enumerate_restricted(Permutation(), e) == std::vector<PipeDream>{PipeDream(total_dim(e), {})});
  }
  CHECK(enumerate_restricted(P("21"), {1, 1}) == std::vector<PipeDream>{PipeDream(2, {{1, 1}})});
}

TEST_CASE("restricted grothendieck polynomials") {
  auto r0 = ranks({1, 1}, {{0}});
  CHECK(groth_restricted(zelevinsky(r0), {1, 1}) == one_minus(var_a(1), var_a(2)));
  CHECK(groth_restricted(Permutation(), {2, 1}) == LaurentPoly::one());
  auto r1 = ranks({1, 1}, {{1}});
  CHECK(groth_restricted(zelevinsky(r1), {1, 1}) == LaurentPoly::one());
}

TEST_CASE("restricted sum equals the relabeled full sum") {
  for (const auto& r : family(3, 2)) {
    if (r.N() > 6) continue;
    const auto& e = r.dims();
    int N = r.N();
    auto top = reversed_block_labels(Alphabet::a, e);
    auto side = block_labels(Alphabet::a, e);
    Substitution s;
    for (int i = 1; i <= N; ++i) {
      s[var_a(i)] = SubstTarget::to(top[i - 1]);
      s[var_b(i)] = SubstTarget::to(side[i - 1]);
    }
    Permutation w = zelevinsky(r);
    CHECK(groth_restricted(w, e) == substitute(groth_via_pipedreams(w, N), s));
  }
}

TEST_CASE("restricted cells") {
  DimensionVector e{1, 1, 1};
  CHECK(is_restricted_cell({1, 1}, e));
  CHECK(is_restricted_cell({1, 2}, e));
  CHECK(is_restricted_cell({2, 1}, e));
  CHECK_FALSE(is_restricted_cell({2, 2}, e));
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(PipeDream(3, {{1, 1}})) == "+.\n.\n");
  CHECK(render_ascii(staircase(4)) == "+++\n++\n+\n");
}
