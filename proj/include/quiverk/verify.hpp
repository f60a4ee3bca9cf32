#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quiverk/quiver.hpp"

namespace quiverk {

struct VerifyOptions {
  int max_n = 2;
  int max_e = 2;
  /// Extra seeded random instances on top of the exhaustive family.
  std::uint64_t count = 0;
  std::uint64_t seed = 1;
  /// 0 means QUIVERK_THREADS, or the hardware concurrency when unset.
  unsigned threads = 0;
};

struct VerifyFailure {
  RankConditions ranks;
  std::string identity;
  std::string diagnostic;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Families larger than this are sampled instead of enumerated.
inline constexpr std::uint64_t kExhaustiveLimit = 10000;
/// Sample size used when the family is too large and no count was given.
inline constexpr std::uint64_t kDefaultSamples = 1000;

/// zelprop, length, component, stable, biject, kms-stab, supersym, rankstab,
/// double, signs. "all" runs each of them.
const std::vector<std::string>& suite_names();

/// The exhaustive family (when small enough) followed by the random samples.
std::vector<RankConditions> verify_instances(const VerifyOptions& opts);

/// Checks one instance; each failed identity is reported once.
std::vector<VerifyFailure> check_instance(const std::string& suite, const RankConditions& r);

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);
VerifyReport run_suite(const std::string& suite, const std::vector<RankConditions>& instances, unsigned threads = 0);

/// Resolves the worker count for a request of 0 (see VerifyOptions::threads).
unsigned worker_count(unsigned requested);

/// Calls fn(i) for i in [0, n) on `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace quiverk
