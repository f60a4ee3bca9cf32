#include "quiverk/io.hpp"

#include <charconv>
#include <limits>

#include "quiverk/errors.hpp"

namespace quiverk::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw MalformedInput(what + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw MalformedInput(what + " is out of range");
  return static_cast<int>(v);
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Json partition_to_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(as_int(x, "partition part"));
  try {
    return Partition(std::move(parts));
  } catch (const InvalidPartition& e) {
    throw MalformedInput(e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw MalformedInput("bad integer string \"" + s + "\"");
    return Integer(s);
  }
  throw MalformedInput("coefficient must be an integer or a decimal string");
}

Json ranks_to_json(const RankConditions& r) {
  Json j = Json::object();
  j["e"] = r.dims();
  j["r"] = r.upper();
  return j;
}

RankConditions ranks_from_json(const Json& j) {
  const Json& je = field(j, "e");
  const Json& jr = field(j, "r");
  if (!je.is_array() || !jr.is_array()) throw MalformedInput("\"e\" and \"r\" must be arrays");
  DimensionVector e;
  for (std::size_t i = 0; i < je.size(); ++i) e.push_back(as_int(je[i], "e[" + std::to_string(i) + "]"));
  std::vector<std::vector<int>> upper;
  for (std::size_t i = 0; i < jr.size(); ++i) {
    if (!jr[i].is_array()) throw MalformedInput("r[" + std::to_string(i) + "] must be an array");
    std::vector<int> row;
    for (std::size_t k = 0; k < jr[i].size(); ++k)
      row.push_back(as_int(jr[i][k], "r[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    upper.push_back(std::move(row));
  }
  return validate_ranks(std::move(e), std::move(upper));
}

RankConditions ranks_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("JSON syntax error: ") + e.what());
  }
  return ranks_from_json(j);
}

VariableId parse_variable(const std::string& name, const std::optional<DimensionVector>& e) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) throw MalformedInput("unknown variable \"" + name + "\"");
  Alphabet alphabet = name[0] == 'a' ? Alphabet::a : Alphabet::b;
  std::string_view rest(name);
  rest.remove_prefix(1);
  if (auto us = rest.find('_'); us != std::string_view::npos) {
    auto block = parse_int(rest.substr(0, us));
    auto pos = parse_int(rest.substr(us + 1));
    if (!e || !block || !pos || *block < 0 || *block >= static_cast<int>(e->size()) || *pos < 1 ||
        *pos > (*e)[*block])
      throw MalformedInput("unknown variable \"" + name + "\"");
    return block_var(alphabet, *e, *block, *pos);
  }
  auto index = parse_int(rest);
  if (!index || *index < 1 || *index > kMaxVariableIndex) throw MalformedInput("unknown variable \"" + name + "\"");
  return {alphabet, *index};
}

Json poly_to_json(const LaurentPoly& p, const std::optional<DimensionVector>& e) {
  VariableNamer name = e ? blocked_namer(*e) : VariableNamer(flat_name);
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::object();
    for (int s = 0; s < Monomial::kSlots; ++s)
      if (int x = t.monomial.exponent_at(s); x != 0) exps[name(Monomial::variable_at(s))] = x;
    Json term = Json::object();
    term["c"] = integer_to_json(t.coeff);
    term["e"] = std::move(exps);
    out.push_back(std::move(term));
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j, const std::optional<DimensionVector>& e) {
  if (!j.is_array()) throw MalformedInput("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& jt : j) {
    Monomial m;
    const Json& exps = field(jt, "e");
    if (!exps.is_object()) throw MalformedInput("\"e\" must be an object");
    for (const auto& [k, v] : exps.items()) {
      VariableId var = parse_variable(k, e);
      m.set_exponent(var, m.exponent(var) + as_int(v, "exponent of " + k));
    }
    terms.push_back({m, integer_from_json(field(jt, "c"))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string poly_to_text(const LaurentPoly& p, const std::optional<DimensionVector>& e) {
  return e ? to_text(p, blocked_namer(*e)) : to_text(p);
}

Json pipedream_to_json(const PipeDream& D) {
  Json pts = Json::array();
  for (Cell c : D.points()) pts.push_back(Json::array({c.row, c.col}));
  Json j = Json::object();
  j["N"] = D.ambient();
  j["points"] = std::move(pts);
  return j;
}

PipeDream pipedream_from_json(const Json& j) {
  int N = as_int(field(j, "N"), "N");
  const Json& pts = field(j, "points");
  if (N < 1 || !pts.is_array()) throw MalformedInput("pipe dream needs N >= 1 and a list of points");
  std::vector<Cell> cells;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2) throw MalformedInput("point must be a [row, col] pair");
    cells.push_back({as_int(p[0], "row"), as_int(p[1], "col")});
  }
  try {
    return PipeDream(N, std::move(cells));
  } catch (const OutOfStaircase& e) {
    throw MalformedInput(e.what());
  }
}

Json perm_to_json(const Permutation& w, int N) { return Json(w.window(N)); }

Json kms_to_json(const RankConditions& r, const std::vector<KmsFactorization>& all) {
  Json out = Json::array();
  for (const auto& f : all) {
    Json seq = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) seq.push_back(perm_to_json(f[i], r.dims()[i] + r.dims()[i + 1]));
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<KmsFactorization> kms_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("KMS list must be an array");
  std::vector<KmsFactorization> out;
  for (const auto& seq : j) {
    if (!seq.is_array()) throw MalformedInput("KMS factorization must be an array");
    KmsFactorization f;
    for (const auto& w : seq) {
      if (!w.is_array()) throw MalformedInput("permutation must be an array");
      std::vector<int> img;
      for (const auto& x : w) img.push_back(as_int(x, "permutation entry"));
      try {
        f.emplace_back(std::move(img));
      } catch (const InvalidPermutation& e) {
        throw MalformedInput(e.what());
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string kms_to_text(const RankConditions& r, const std::vector<KmsFactorization>& all) {
  std::string out;
  for (const auto& f : all) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ' ';
      out += f[i].to_string(r.dims()[i] + r.dims()[i + 1]);
    }
    out += '\n';
  }
  return out;
}

Json coefficients_to_json(const QuiverCoefficients& c) {
  Json out = Json::array();
  for (const auto& [mu, coeff] : c) {
    Json jm = Json::array();
    for (const auto& p : mu) jm.push_back(partition_to_json(p));
    Json entry = Json::object();
    entry["mu"] = std::move(jm);
    entry["c"] = integer_to_json(coeff);
    out.push_back(std::move(entry));
  }
  return out;
}

QuiverCoefficients coefficients_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("coefficient list must be an array");
  QuiverCoefficients out;
  for (const auto& entry : j) {
    const Json& jm = field(entry, "mu");
    if (!jm.is_array()) throw MalformedInput("\"mu\" must be an array");
    PartitionSeq mu;
    for (const auto& p : jm) mu.push_back(partition_from_json(p));
    out[mu] += integer_from_json(field(entry, "c"));
  }
  return out;
}

std::string coefficients_to_text(const QuiverCoefficients& c) {
  std::string out;
  for (const auto& [mu, coeff] : c) {
    out += '(';
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (i > 0) out += ',';
      out += mu[i].to_string();
    }
    out += ") " + coeff.str() + '\n';
  }
  return out;
}

Json expansion_to_json(const StableExpansion& c) {
  Json out = Json::object();
  for (const auto& [lambda, coeff] : c) out[partition_to_json(lambda).dump()] = integer_to_json(coeff);
  return out;
}

Permutation perm_from_csv(const std::string& text) {
  std::vector<int> img;
  try {
    if (text.find(',') == std::string::npos) return Permutation::from_string(text);
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      auto v = parse_int(std::string_view(text).substr(start, end - start));
      if (!v) throw MalformedInput("bad permutation entry in \"" + text + "\"");
      img.push_back(*v);
      start = end + 1;
    }
    return Permutation(std::move(img));
  } catch (const InvalidPermutation& e) {
    throw MalformedInput(e.what());
  }
}

}  // namespace quiverk::io
