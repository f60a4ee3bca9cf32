#include <doctest.h>

#include "support.hpp"

using namespace qt;

namespace {

std::set<std::pair<Permutation, Permutation>> as_set(const std::vector<std::pair<Permutation, Permutation>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("hecke_mul examples") {
  CHECK(hecke_mul(P("213"), P("213")) == P("213"));
  CHECK(hecke_mul(P("213"), P("132")) == P("231"));
  CHECK(hecke_mul(P("321"), P("213")) == P("321"));
}

TEST_CASE("hecke_mul equals the Bruhat-maximal product on S_3 and S_4") {
  for (int N : {3, 4}) {
    auto all = perms_of(N);
    for (const auto& u : all)
      for (const auto& v : all) CHECK(hecke_mul(u, v) == demazure_oracle(u, v, N));
  }
}

TEST_CASE("hecke_mul agrees with composition on length-additive pairs") {
  auto all = perms_of(4);
  for (const auto& u : all)
    for (const auto& v : all)
      if (length(u * v) == length(u) + length(v)) CHECK(hecke_mul(u, v) == u * v);
}

TEST_CASE("hecke word products") {
  CHECK(hecke_word_product(std::vector<int>{3, 2, 1, 3}) == SignedPerm{P("4132"), 1});
  CHECK(hecke_word_product(std::vector<int>{1, 1}) == SignedPerm{P("213"), -1});
  CHECK(hecke_word_product(std::vector<int>{1, 2, 1, 2}) == SignedPerm{P("321"), -1});
  CHECK(hecke_word_product(std::vector<int>{}) == SignedPerm{Permutation(), 1});
}

TEST_CASE("word products match the free algebra on all S_3 words up to length 6") {
  for (int L = 0; L <= 6; ++L)
    for (int mask = 0; mask < (1 << L); ++mask) {
      std::vector<int> word;
      for (int k = 0; k < L; ++k) word.push_back((mask >> k & 1) + 1);
      auto combo = free_algebra_word(word, 3);
      REQUIRE(combo.size() == 1);
      auto [perm, coeff] = *combo.begin();
      SignedPerm got = hecke_word_product(word);
      CHECK(got.perm == perm);
      CHECK(got.sign == coeff);
      CHECK(got.sign == ((L - length(perm)) % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("hecke_mul is associative on S_4") {
  auto all = perms_of(4);
  for (const auto& u : all)
    for (const auto& v : all) {
      Permutation uv = hecke_mul(u, v);
      for (const auto& x : all) CHECK(hecke_mul(uv, x) == hecke_mul(u, hecke_mul(v, x)));
    }
}

TEST_CASE("hecke_mul is monotone on S_5") {
  auto all = perms_of(5);
  for (const auto& u : all)
    for (const auto& v : all) {
      Permutation w = hecke_mul(u, v);
      CHECK(bruhat_leq(u, w));
      CHECK(bruhat_leq(v, w));
    }
}

TEST_CASE("descents are inherited from the outer factors on S_4") {
  auto all = perms_of(4);
  for (const auto& u : all)
    for (const auto& v : all) {
      Permutation w = hecke_mul(u, v);
      auto dw = descents(w), dv = descents(v);
      CHECK(std::includes(dw.begin(), dw.end(), dv.begin(), dv.end()));
      auto diw = descents(inverse(w)), diu = descents(inverse(u));
      CHECK(std::includes(diw.begin(), diw.end(), diu.begin(), diu.end()));
    }
}

TEST_CASE("variadic hecke product") {
  std::vector<Permutation> f{P("213"), P("132"), P("213")};
  CHECK(hecke_mul(f) == P("321"));
  CHECK(hecke_mul(std::span<const Permutation>()).is_identity());
}

TEST_CASE("hecke factor pairs examples") {
  using Pair = std::pair<Permutation, Permutation>;
  CHECK(as_set(hecke_factor_pairs(P("213"), 2)) ==
        std::set<Pair>{{P("12"), P("21")}, {P("21"), P("12")}, {P("21"), P("21")}});
  CHECK(as_set(hecke_factor_pairs(Permutation(), 2)) == std::set<Pair>{{Permutation(), Permutation()}});
  CHECK(as_set(hecke_factor_pairs(P("231"), 3)) == std::set<Pair>{{P("123"), P("231")},
                                                                  {P("213"), P("132")},
                                                                  {P("213"), P("231")},
                                                                  {P("231"), P("123")},
                                                                  {P("231"), P("132")}});
  CHECK(hecke_factor_pairs(P("321"), 2).empty());
}

TEST_CASE("hecke factor pairs match brute force") {
  for (int k = 1; k <= 4; ++k) {
    auto all = perms_of(k);
    for (const auto& w : all) {
      std::set<std::pair<Permutation, Permutation>> expect;
      for (const auto& u : all)
        for (const auto& v : all)
          if ((k <= 3 ? demazure_oracle(u, v, k) : hecke_mul(u, v)) == w) expect.insert({u, v});
      auto got = hecke_factor_pairs(w, k);
      CHECK(got.size() == expect.size());
      CHECK(as_set(got) == expect);
    }
  }
}
