#include <doctest.h>

#include "quiverk/errors.hpp"
#include "support.hpp"

using namespace qt;

TEST_CASE("length, descents and inverse") {
  CHECK(length(P("4132")) == 4);
  CHECK(descents(P("4132")) == std::vector<int>{1, 3});
  CHECK(inverse(P("4132")) == P("2431"));

  CHECK(length(Permutation()) == 0);
  CHECK(descents(Permutation()).empty());
  CHECK(inverse(Permutation()).is_identity());

  CHECK(length(P("4321")) == 6);
  CHECK(descents(P("4321")) == std::vector<int>{1, 2, 3});
  CHECK(inverse(P("4321")) == P("4321"));
}

TEST_CASE("length and descents agree with inversion counting on S_5") {
  for (const auto& w : perms_of(5)) {
    CHECK(length(w) == inversions(w, 5));
    std::vector<int> d;
    for (int i = 1; i < 5; ++i)
      if (w(i) > w(i + 1)) d.push_back(i);
    CHECK(descents(w) == d);
    CHECK((inverse(w) * w).is_identity());
    CHECK((w * inverse(w)).is_identity());
  }
}

TEST_CASE("composition applies the right factor first") {
  Permutation w = simple_reflection(3) * simple_reflection(2) * simple_reflection(1) * simple_reflection(3);
  CHECK(w == P("4132"));
  CHECK((P("231") * P("213"))(1) == P("231")(P("213")(1)));
}

TEST_CASE("canonical form trims trailing fixed points") {
  CHECK(Permutation({2, 1, 3, 4}) == P("21"));
  CHECK(Permutation({1, 2, 3}).is_identity());
  CHECK(P("21").window(4) == std::vector<int>{2, 1, 3, 4});
  CHECK(P("213").to_string(5) == "21345");
  CHECK(Permutation().to_string() == "1");
  CHECK(Permutation({2, 1, 3, 4, 5, 6, 7, 8, 9, 11, 10}).to_string() == "2,1,3,4,5,6,7,8,9,11,10");
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::from_string("12a"), InvalidPermutation);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
  CHECK_THROWS_AS(Partition({0, 2}), InvalidPartition);
  CHECK(Partition({2, 0}) == Partition({2}));
  CHECK_NOTHROW(Partition(std::vector<int>{}));
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == P("21"));
  CHECK(longest_element(4) == P("4321"));
  CHECK(longest_element(1).is_identity());
}

TEST_CASE("embed_shift") {
  CHECK(embed_shift(P("21"), 2) == P("1243"));
  CHECK(embed_shift(Permutation(), 3).is_identity());
  CHECK(embed_shift(P("4132"), 1) == P("15243"));
}

TEST_CASE("hat") {
  CHECK(hat(P("4132"), 4) == P("4213"));
  CHECK(hat(Permutation(), 5).is_identity());
  CHECK(hat(longest_element(4), 4) == longest_element(4));
  for (int N = 1; N <= 6; ++N)
    for (const auto& w : perms_of(N)) CHECK(hat(hat(w, N), N) == w);
}

TEST_CASE("grassmannian permutations") {
  CHECK(grassmannian_for_partition(Partition({2, 1}), 2) == P("2413"));
  CHECK(grassmannian_for_partition(Partition(), 3).is_identity());
  CHECK(grassmannian_for_partition(Partition({2}), 1) == P("312"));
  for (int weight = 1; weight <= 6; ++weight)
    for (const auto& lambda : partitions_of(weight, weight))
      for (int k = lambda.rows(); k <= lambda.rows() + 2; ++k) {
        Permutation w = grassmannian_for_partition(lambda, k);
        CHECK(descents(w) == std::vector<int>{k});
        CHECK(length(w) == weight);
      }
  CHECK_THROWS(grassmannian_for_partition(Partition({1, 1}), 1));
}

TEST_CASE("partial permutations") {
  CHECK(is_partial_permutation(P("312"), 2, 1));
  CHECK_FALSE(is_partial_permutation(P("312"), 1, 1));
  CHECK(is_partial_permutation(Permutation(), 0, 0));
  CHECK_FALSE(is_partial_permutation(P("321"), 1, 1));
}

TEST_CASE("bruhat order examples") {
  CHECK(bruhat_leq(Permutation(), P("4132")));
  CHECK(bruhat_leq(P("213"), P("321")));
  CHECK_FALSE(bruhat_leq(P("321"), P("312")));
}

TEST_CASE("bruhat order matches the tableau criterion on S_5") {
  auto all = perms_of(5);
  for (const auto& u : all)
    for (const auto& w : all) {
      bool le = bruhat_leq(u, w);
      CHECK(le == bruhat_oracle(u, w, 5));
      if (le) CHECK(length(u) <= length(w));
    }
}

TEST_CASE("bruhat order is a partial order on S_4") {
  auto all = perms_of(4);
  for (const auto& u : all) {
    CHECK(bruhat_leq(u, u));
    for (const auto& v : all) {
      if (u != v && bruhat_leq(u, v)) CHECK_FALSE(bruhat_leq(v, u));
      if (!bruhat_leq(u, v)) continue;
      for (const auto& w : all)
        if (bruhat_leq(v, w)) CHECK(bruhat_leq(u, w));
    }
  }
}

TEST_CASE("right multiplication by s_i changes length by one") {
  for (int N = 2; N <= 6; ++N)
    for (const auto& w : perms_of(N))
      for (int i = 1; i < N; ++i) CHECK(std::abs(length(w) - length(w * simple_reflection(i))) == 1);
}

TEST_CASE("reduced words") {
  for (const auto& w : perms_of(5)) {
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    Permutation x;
    for (int i : word) x = x * simple_reflection(i);
    CHECK(x == w);
  }
}

TEST_CASE("enumerations") {
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(0).size() == 1);
  auto parts = partitions_of(5, 5);
  CHECK(parts.size() == 7);
  CHECK(parts.front() == Partition({5}));
  CHECK(parts.back() == Partition({1, 1, 1, 1, 1}));
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(partitions_of(0, 3) == std::vector<Partition>{Partition()});
  CHECK(Partition({2, 1}).to_string() == "(2,1)");
  CHECK(Partition({3, 1, 1}).weight() == 5);
}
