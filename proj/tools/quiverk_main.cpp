// quiverk: command-line front end for the quiverk library.
//
//   quiverk zel    --ranks R          z(r), hat z(r), length, d(r)
//   quiverk kms    --ranks R          KMS-factorizations
//   quiverk groth  --perm W --N N     double Grothendieck polynomial
//   quiverk ratio  --ranks R          ratio of Grothendieck polynomials
//   quiverk double --ranks R          double quiver polynomial
//   quiverk coeffs --ranks R          quiver coefficients
//   quiverk verify --suite S ...      identity sweeps
//   quiverk gen-ranks --n N ...       rank condition corpora
//
// R is a file name, inline JSON ({"e":[1,1],"r":[[0]]}) or "-" for stdin.
// Exit status: 0 success, 1 verification failures, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "quiverk/errors.hpp"
#include "quiverk/io.hpp"
#include "quiverk/verify.hpp"

using namespace quiverk;
using io::Json;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitBadInput = 2;

RankConditions load_ranks(const std::string& source) {
  std::string text;
  auto first = source.find_first_not_of(" \t\r\n");
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (first != std::string::npos && source[first] == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw MalformedInput("cannot read rank conditions from \"" + source + "\"");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return io::ranks_from_text(text);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void emit_text(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
}

struct Options {
  std::string ranks;
  std::string format;
  std::string method = "facseq";
  std::string perm;
  int N = 0;
  std::string suite = "all";
  int max_n = 2;
  int max_e = 2;
  std::string count;
  std::uint64_t seed = 1;
  int gen_n = 1;
};

int run_zel(const Options& o) {
  RankConditions r = load_ranks(o.ranks);
  Permutation z = conj_zelevinsky(r);
  Permutation zh = zelevinsky(r);
  auto stats = rank_stats(r);
  if (o.format == "json") {
    Json j = Json::object();
    j["N"] = stats.N;
    j["z"] = io::perm_to_json(z, stats.N);
    j["zhat"] = io::perm_to_json(zh, stats.N);
    j["length"] = length(z);
    j["d"] = stats.d;
    emit(j);
  } else {
    std::ostringstream out;
    out << "z = " << z.to_string(stats.N) << '\n'
        << "zhat = " << zh.to_string(stats.N) << '\n'
        << "length = " << length(z) << '\n'
        << "d = " << stats.d << '\n';
    std::cout << out.str();
  }
  return 0;
}

KmsMethod parse_method(const std::string& m) {
  if (m == "facseq") return KmsMethod::facseq;
  if (m == "pipedream") return KmsMethod::pipedream;
  if (m == "moves") return KmsMethod::moves;
  throw MalformedInput("unknown method \"" + m + "\"");
}

int run_kms(const Options& o) {
  RankConditions r = load_ranks(o.ranks);
  auto all = enumerate_kms(r, parse_method(o.method));
  if (o.format == "json")
    emit(io::kms_to_json(r, all));
  else
    std::cout << io::kms_to_text(r, all);
  return 0;
}

int run_groth(const Options& o) {
  Permutation w = io::perm_from_csv(o.perm);
  if (o.N < 1) throw MalformedInput("--N must be positive");
  if (w.size() > o.N) throw MalformedInput(w.to_string() + " is not in S_" + std::to_string(o.N));
  LaurentPoly g;
  if (o.method == "ls")
    g = groth_ls(w, o.N);
  else if (o.method == "pipedream")
    g = groth_via_pipedreams(w, o.N);
  else
    throw MalformedInput("unknown method \"" + o.method + "\"");
  if (o.format == "json")
    emit(io::poly_to_json(g));
  else
    emit_text(io::poly_to_text(g));
  return 0;
}

int run_poly(const Options& o, LaurentPoly (*compute)(const RankConditions&)) {
  RankConditions r = load_ranks(o.ranks);
  LaurentPoly p = compute(r);
  if (o.format == "json")
    emit(io::poly_to_json(p, r.dims()));
  else
    emit_text(io::poly_to_text(p, r.dims()));
  return 0;
}

int run_coeffs(const Options& o) {
  RankConditions r = load_ranks(o.ranks);
  auto c = quiver_coefficients(r);
  if (o.format == "text")
    std::cout << io::coefficients_to_text(c);
  else
    emit(io::coefficients_to_json(c));
  return 0;
}

std::uint64_t parse_count(const std::string& s, std::uint64_t fallback) {
  if (s.empty()) return fallback;
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw MalformedInput("--count must be a non-negative integer");
    return static_cast<std::uint64_t>(v);
  } catch (const std::logic_error&) {
    throw MalformedInput("--count must be a non-negative integer");
  }
}

int run_verify(const Options& o) {
  VerifyOptions v;
  v.max_n = o.max_n;
  v.max_e = o.max_e;
  v.count = parse_count(o.count, 0);
  v.seed = o.seed;
  VerifyReport rep = run_suite(o.suite, v);
  if (o.format == "json") {
    Json j = Json::object();
    j["suite"] = rep.suite;
    j["instances"] = rep.instances;
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
      Json jf = Json::object();
      jf["ranks"] = io::ranks_to_json(f.ranks);
      jf["identity"] = f.identity;
      jf["diagnostic"] = f.diagnostic;
      fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    j["passed"] = rep.passed();
    emit(j);
  } else {
    for (const auto& f : rep.failures)
      std::cout << "FAIL " << f.identity << ' ' << io::ranks_to_json(f.ranks).dump()
                << (f.diagnostic.empty() ? "" : ": " + f.diagnostic) << '\n';
    std::cout << "suite " << rep.suite << ": " << rep.instances << " instances, " << rep.failures.size()
              << " failures\n"
              << (rep.passed() ? "PASS" : "FAIL") << '\n';
  }
  return rep.passed() ? 0 : kExitFailures;
}

int run_gen_ranks(const Options& o) {
  if (o.gen_n < 1 || o.max_e < 1) throw MalformedInput("--n and --max-e must be positive");
  std::vector<RankConditions> out;
  if (o.count.empty() || o.count == "all") {
    if (rank_family_size(o.gen_n, o.max_e, kExhaustiveLimit) > kExhaustiveLimit)
      throw MalformedInput("exhaustive family exceeds " + std::to_string(kExhaustiveLimit) +
                           " instances; pass --count");
    for (auto& r : rank_family(o.gen_n, o.max_e))
      if (r.n() == o.gen_n) out.push_back(std::move(r));
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::uint64_t k = 0, c = parse_count(o.count, 0); k < c; ++k)
      out.push_back(random_rank_conditions(o.gen_n, o.max_e, rng));
  }
  if (o.format == "text") {
    for (const auto& r : out) std::cout << io::ranks_to_json(r).dump() << '\n';
  } else {
    Json j = Json::array();
    for (const auto& r : out) j.push_back(io::ranks_to_json(r));
    emit(j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver coefficients, Zelevinsky permutations and Grothendieck polynomials"};
  app.require_subcommand(1);
  Options o;
  auto formats = CLI::IsMember({"json", "text"});

  auto ranks_cmd = [&](const char* name, const char* help, const char* default_format) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--ranks", o.ranks, "rank conditions: FILE, inline JSON, or - for stdin")->required();
    sub->add_option("--format", o.format, "json or text")->check(formats)->default_str(default_format);
    return sub;
  };
  auto* zel = ranks_cmd("zel", "Zelevinsky permutations and codimension", "text");
  auto* kms = ranks_cmd("kms", "KMS-factorizations", "text");
  kms->add_option("--method", o.method, "facseq, pipedream or moves")
      ->check(CLI::IsMember({"facseq", "pipedream", "moves"}));
  auto* ratio = ranks_cmd("ratio", "ratio of Grothendieck polynomials", "text");
  auto* dbl = ranks_cmd("double", "double quiver polynomial", "text");
  auto* coeffs = ranks_cmd("coeffs", "quiver coefficients", "json");

  auto* groth = app.add_subcommand("groth", "double Grothendieck polynomial");
  groth->add_option("--perm", o.perm, "one-line permutation, e.g. 1,3,2 or 132")->required();
  groth->add_option("--N", o.N, "ambient size")->required();
  groth->add_option("--method", o.method, "pipedream or ls")->check(CLI::IsMember({"pipedream", "ls"}));
  groth->add_option("--format", o.format, "json or text")->check(formats);

  auto* verify = app.add_subcommand("verify", "run identity sweeps");
  verify->add_option("--suite", o.suite, "suite name or all");
  verify->add_option("--max-n", o.max_n, "largest number of arrows");
  verify->add_option("--max-e", o.max_e, "largest bundle rank");
  verify->add_option("--count", o.count, "extra random instances");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--format", o.format, "json or text")->check(formats);

  auto* gen = app.add_subcommand("gen-ranks", "generate valid rank conditions");
  gen->add_option("--n", o.gen_n, "number of arrows")->required();
  gen->add_option("--max-e", o.max_e, "largest bundle rank")->required();
  gen->add_option("--count", o.count, "number of random instances, or all");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--format", o.format, "json or text")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (zel->parsed()) {
      if (o.format.empty()) o.format = "text";
      return run_zel(o);
    }
    if (kms->parsed()) {
      if (o.format.empty()) o.format = "text";
      return run_kms(o);
    }
    if (groth->parsed()) {
      if (o.method == "facseq") o.method = "pipedream";
      return run_groth(o);
    }
    if (ratio->parsed()) return run_poly(o, ratio_poly);
    if (dbl->parsed()) return run_poly(o, double_quiver_poly);
    if (coeffs->parsed()) {
      if (o.format.empty()) o.format = "json";
      return run_coeffs(o);
    }
    if (verify->parsed()) return run_verify(o);
    if (gen->parsed()) {
      if (o.format.empty()) o.format = "json";
      return run_gen_ranks(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
