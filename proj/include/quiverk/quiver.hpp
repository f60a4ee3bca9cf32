#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "quiverk/groth.hpp"
#include "quiverk/labels.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/pipedream.hpp"
#include "quiverk/poly.hpp"

namespace quiverk {

/// Rank conditions r_{ij} (0 <= i < j <= n) for a sequence of n+1 bundles of
/// ranks e_0..e_n. Construction only checks shapes; use validate_ranks for
/// the occurrence inequalities.
class RankConditions {
 public:
  RankConditions() = default;
  /// `upper[i]` lists r_{i,i+1}, ..., r_{i,n}.
  RankConditions(DimensionVector e, std::vector<std::vector<int>> upper);

  int n() const { return static_cast<int>(e_.size()) - 1; }
  const DimensionVector& dims() const { return e_; }
  const std::vector<std::vector<int>>& upper() const { return upper_; }
  int N() const { return total_dim(e_); }

  /// Extended accessor: r_{ij} for i < j, e_j + ... + e_i for j <= i, and 0
  /// when i < 0 or j > n.
  int operator()(int i, int j) const;

  friend bool operator==(const RankConditions&, const RankConditions&) = default;
  friend auto operator<=>(const RankConditions&, const RankConditions&) = default;

 private:
  DimensionVector e_;
  std::vector<std::vector<int>> upper_;
};

/// Checks shapes and both occurrence inequality families. Dimension entries
/// must be positive unless `allow_zero_dims`. Throws MalformedInput or
/// NonOccurring naming the offending (i,j).
RankConditions validate_ranks(DimensionVector e, std::vector<std::vector<int>> upper,
                              bool allow_zero_dims = false);
void validate_ranks(const RankConditions& r, bool allow_zero_dims = false);

struct RankStats {
  int N = 0;
  int d = 0;
};
RankStats rank_stats(const RankConditions& r);

/// The Grassmannian block W_{ij} in S_{r_{i+1,j-1}}; 0 <= i < n, 0 < j <= n.
Permutation W_perm(const RankConditions& r, int i, int j);

/// z(r) from the pointwise closed form.
Permutation conj_zelevinsky(const RankConditions& r);
/// z(r) as the ordered product of the W_{ij}, j outer, i inner.
Permutation conj_zelevinsky_product(const RankConditions& r);
/// hat(z(r), N).
Permutation zelevinsky(const RankConditions& r);

/// r'_{ij} = r_{n-j,n-i}.
RankConditions mirror_ranks(const RankConditions& r);

/// r^e_{ij} = min(e_i..e_j).
RankConditions maximal_ranks(const DimensionVector& e);

struct MinimalData {
  RankConditions ranks;
  Permutation z;
  PipeDream dream;
};
/// r^e, z(r^e) and the unique pipe dream of hat(z(r^e)).
MinimalData minimal_data(const DimensionVector& e);
/// The union of [1,r_{i-1,0}] x [1,r_{n,i+1}] for i = 1..n-1.
PipeDream minimal_dream(const DimensionVector& e);

/// delta_j in S_{r_{n,j-1}}, 1 <= j <= n-1.
Permutation delta_perm(const RankConditions& r, int j);

using KmsFactorization = std::vector<Permutation>;

/// w_1 . delta_1 . w_2 ... delta_{n-1} . w_n under the absolute Hecke product.
Permutation kms_product(const RankConditions& r, std::span<const Permutation> seq);
bool is_kms(const RankConditions& r, std::span<const Permutation> seq);

enum class KmsMethod { facseq, pipedream, moves };

/// Every KMS-factorization of r, sorted lexicographically and deduplicated.
std::vector<KmsFactorization> enumerate_kms(const RankConditions& r, KmsMethod method);

/// Union of the rotated blocks of `dreams` (block i shifted by
/// (r_{i-2,0}, r_{n,i+1})) and the minimal dream of e. Throws BlockOverflow
/// when P_i leaves [1,e_{i-1}] x [1,e_i], MalformedInput on a wrong count.
PipeDream phi_hat(const RankConditions& r, std::span<const PipeDream> dreams);

/// Inverse of phi_hat: nullopt if D does not contain the minimal dream or
/// has a crossing outside every block.
std::optional<std::vector<PipeDream>> split_restricted(const RankConditions& r, const PipeDream& D);

/// r + m.
RankConditions shift_ranks(const RankConditions& r, int m);
/// r^{(k)}: e'_i = r_{i,i+k}, r'_{ij} = r_{i,j+k}. Zero dimensions may occur.
RankConditions truncate_ranks(const RankConditions& r, int k);

/// Double Grothendieck polynomial of a permutation whose pipe dreams fit in
/// the rectangle side.size() x top.size(), with columns labeled `top` and rows
/// labeled `side`.
LaurentPoly rectangle_groth(const Permutation& w, std::span<const VariableId> top,
                            std::span<const VariableId> side);

/// G_{hat z(r)}(a-breve; a) / G_{hat z(e)}(a-breve; a).
LaurentPoly ratio_poly(const RankConditions& r);
/// sum over KMS-factorizations of the signed products of G_{w_i}(a^i; a^{i-1}).
LaurentPoly component_rhs(const RankConditions& r);
/// K_r(a;b) = G_{hat z(r)}(a-breve; b) / G_{hat z(e)}(a-breve; b).
LaurentPoly double_quiver_poly(const RankConditions& r);
/// Signed sum of products of stable G_{w_i}(a^i; b^{i-1}).
LaurentPoly double_component_rhs(const RankConditions& r);
/// Signed sum of products of stable G_{w_i}(a^i; a^{i-1}).
LaurentPoly stable_component_rhs(const RankConditions& r);

using PartitionSeq = std::vector<Partition>;
using QuiverCoefficients = std::map<PartitionSeq, Integer>;

QuiverCoefficients quiver_coefficients(const RankConditions& r);

/// sum c_mu prod G_{mu_i}(a^i; x^{i-1}) with x = b (double) or x = a.
LaurentPoly quiver_expansion(const RankConditions& r, const QuiverCoefficients& c, bool double_form);

/// Every valid r with dimension vector e, in a fixed order.
std::vector<RankConditions> all_rank_conditions(const DimensionVector& e);
/// Every valid r with 1 <= n <= max_n and 1 <= e_i <= max_e.
std::vector<RankConditions> rank_family(int max_n, int max_e);
/// Number of instances rank_family(max_n, max_e) would produce, or any value
/// above `limit` once it is known to exceed it.
std::uint64_t rank_family_size(int max_n, int max_e, std::uint64_t limit = UINT64_MAX);
/// A valid r with the given n and entries of e drawn from 1..max_e.
RankConditions random_rank_conditions(int n, int max_e, std::mt19937_64& rng);

}  // namespace quiverk
