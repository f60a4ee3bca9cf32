#include <doctest.h>

#include "quiverk/errors.hpp"
#include "quiverk/io.hpp"
#include "support.hpp"

using namespace qt;
using io::Json;

TEST_CASE("integers") {
  CHECK(io::integer_to_json(Integer(-7)) == Json(-7));
  Integer big = Integer(1) << 80;
  CHECK(io::integer_to_json(big) == Json(big.str()));
  CHECK(io::integer_from_json(io::integer_to_json(big)) == big);
  CHECK(io::integer_from_json(Json("-12")) == Integer(-12));
  CHECK_THROWS_AS(io::integer_from_json(Json("1x")), MalformedInput);
  CHECK_THROWS_AS(io::integer_from_json(Json(1.5)), MalformedInput);
}

TEST_CASE("rank conditions round trip") {
  for (const auto& r : family(3, 2)) {
    Json j = io::ranks_to_json(r);
    CHECK(io::ranks_from_json(j) == r);
    CHECK(io::ranks_from_text(j.dump()) == r);
  }
  CHECK(io::ranks_to_json(ranks({1, 1, 1}, {{0, 0}, {0}})).dump() == R"({"e":[1,1,1],"r":[[0,0],[0]]})");
}

TEST_CASE("rank condition parse errors") {
  CHECK_THROWS_AS(io::ranks_from_text("{"), MalformedInput);
  CHECK_THROWS_AS(io::ranks_from_text(R"({"e":[1,1]})"), MalformedInput);
  CHECK_THROWS_AS(io::ranks_from_text(R"({"e":[1,1],"r":[["x"]]})"), MalformedInput);
  CHECK_THROWS_AS(io::ranks_from_text(R"({"e":[1,1],"r":[[0],[0]]})"), MalformedInput);
  CHECK_THROWS_AS(io::ranks_from_text(R"({"e":[1,1],"r":[[3]]})"), NonOccurring);
}

TEST_CASE("polynomials round trip") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly p = random_poly(rng);
    CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
  }
  for (const auto& r : family(2, 2)) {
    LaurentPoly K = double_quiver_poly(r);
    Json j = io::poly_to_json(K, r.dims());
    CHECK(io::poly_from_json(j, r.dims()) == K);
    CHECK(io::poly_from_json(Json::parse(j.dump()), r.dims()) == K);
  }
  LaurentPoly g = one_minus(var_b(1), var_a(1));
  CHECK(io::poly_to_json(g).dump() == R"([{"c":1,"e":{}},{"c":-1,"e":{"b1":1,"a1":-1}}])");
}

TEST_CASE("variable names") {
  DimensionVector e{1, 2, 1};
  CHECK(io::parse_variable("a3", std::nullopt) == var_a(3));
  CHECK(io::parse_variable("b1_2", e) == block_var(Alphabet::b, e, 1, 2));
  CHECK(io::parse_variable("a2_1", e) == var_a(4));
  CHECK_THROWS_AS(io::parse_variable("a1_3", e), MalformedInput);
  CHECK_THROWS_AS(io::parse_variable("c1", std::nullopt), MalformedInput);
  CHECK_THROWS_AS(io::parse_variable("a0", std::nullopt), MalformedInput);
  CHECK_THROWS_AS(io::parse_variable("a1_1", std::nullopt), MalformedInput);
  CHECK(io::poly_to_text(one_minus(var_b(1), var_a(2)), DimensionVector{1, 1}) == "1 - b0_1*a1_1^-1");
}

TEST_CASE("kms factorizations round trip") {
  for (const auto& r : family(2, 2)) {
    auto all = enumerate_kms(r, KmsMethod::facseq);
    CHECK(io::kms_from_json(io::kms_to_json(r, all)) == all);
  }
  auto r = ranks({1, 1, 1}, {{0, 0}, {0}});
  auto all = enumerate_kms(r, KmsMethod::facseq);
  CHECK(io::kms_to_json(r, all).dump() == "[[[2,1],[2,1]]]");
  CHECK(io::kms_to_text(r, all) == "21 21\n");
}

TEST_CASE("coefficients round trip") {
  for (const auto& r : family(2, 2)) {
    auto c = quiver_coefficients(r);
    CHECK(io::coefficients_from_json(io::coefficients_to_json(c)) == c);
  }
  auto c = quiver_coefficients(ranks({1, 1, 1}, {{0, 0}, {0}}));
  CHECK(io::coefficients_to_json(c).dump() == R"([{"mu":[[1],[1]],"c":1}])");
  CHECK(io::coefficients_to_text(c) == "((1),(1)) 1\n");
  CHECK_THROWS_AS(io::coefficients_from_json(Json::parse(R"([{"mu":[[1,2]],"c":1}])")), MalformedInput);
}

TEST_CASE("expansions and permutations") {
  CHECK(io::expansion_to_json(expand_stable(P("2143"))).dump() == R"({"[1,1]":1,"[2]":1,"[2,1]":-1})");
  CHECK(io::perm_to_json(P("4132"), 5).dump() == "[4,1,3,2,5]");
  CHECK(io::perm_from_csv("1,3,2") == P("132"));
  CHECK(io::perm_from_csv("132") == P("132"));
  CHECK(io::perm_from_csv("2,1,3,4,5,6,7,8,9,11,10")(10) == 11);
  CHECK_THROWS_AS(io::perm_from_csv("1,1"), MalformedInput);
  CHECK_THROWS_AS(io::perm_from_csv("1,,2"), MalformedInput);
}

TEST_CASE("pipe dreams round trip") {
  PipeDream D(4, {{1, 1}, {2, 1}});
  CHECK(io::pipedream_to_json(D).dump() == R"({"N":4,"points":[[1,1],[2,1]]})");
  CHECK(io::pipedream_from_json(io::pipedream_to_json(D)) == D);
  CHECK_THROWS_AS(io::pipedream_from_json(Json::parse(R"({"N":3,"points":[[2,2]]})")), MalformedInput);
}
