#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverk/groth.hpp"
#include "quiverk/quiver.hpp"

namespace quiverk::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const Integer& c);
Integer integer_from_json(const Json& j);

/// {"e":[...],"r":[[r01,r02,...],[r12,...],...]}. Parsing validates the
/// result (MalformedInput / NonOccurring).
Json ranks_to_json(const RankConditions& r);
RankConditions ranks_from_json(const Json& j);
/// Parses JSON text; MalformedInput on a syntax error.
RankConditions ranks_from_text(const std::string& text);

/// Terms in canonical order as {"c": coefficient, "e": {name: exponent}}.
/// Names are blocked (a0_1) when `e` is given, flat (a3) otherwise.
Json poly_to_json(const LaurentPoly& p, const std::optional<DimensionVector>& e = std::nullopt);
LaurentPoly poly_from_json(const Json& j, const std::optional<DimensionVector>& e = std::nullopt);
/// Inverse of the variable namers; MalformedInput on an unknown name.
VariableId parse_variable(const std::string& name, const std::optional<DimensionVector>& e);

std::string poly_to_text(const LaurentPoly& p, const std::optional<DimensionVector>& e = std::nullopt);

/// w_i is written as its one-line form in S_{e_{i-1}+e_i}.
Json kms_to_json(const RankConditions& r, const std::vector<KmsFactorization>& all);
std::vector<KmsFactorization> kms_from_json(const Json& j);
std::string kms_to_text(const RankConditions& r, const std::vector<KmsFactorization>& all);

/// [{"mu":[[1],[1]],"c":1}, ...].
Json coefficients_to_json(const QuiverCoefficients& c);
QuiverCoefficients coefficients_from_json(const Json& j);
std::string coefficients_to_text(const QuiverCoefficients& c);

/// {"[2,1]": -1, ...}.
Json expansion_to_json(const StableExpansion& c);

/// {"N": 4, "points": [[1,1],[2,1]]}.
Json pipedream_to_json(const PipeDream& D);
PipeDream pipedream_from_json(const Json& j);

Json perm_to_json(const Permutation& w, int N);
/// Accepts "1,3,2" or "132".
Permutation perm_from_csv(const std::string& text);

}  // namespace quiverk::io
