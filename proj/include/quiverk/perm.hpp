#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quiverk {

/// A permutation of the positive integers moving finitely many points, kept in
/// one-line notation with trailing fixed points trimmed. S_N embeds in S_{N+1}
/// transparently: 4132 and 41325 are the same value.
///
/// Products follow (u * v)(i) = u(v(i)), so a word s_{i1} s_{i2} ... s_{ik}
/// applies its rightmost letter first.
class Permutation {
 public:
  /// The identity.
  Permutation() = default;

  /// Builds from one-line images; throws InvalidPermutation unless `images` is
  /// a bijection of {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  /// Parses the compact digit form "4132" (windows up to 9).
  static Permutation from_string(std::string_view digits);

  /// Image of i (i >= 1). Points outside the window are fixed.
  int operator()(int i) const {
    return i >= 1 && i <= static_cast<int>(images_.size()) ? images_[i - 1] : i;
  }

  /// Smallest N with this permutation in S_N (0 for the identity).
  int size() const { return static_cast<int>(images_.size()); }

  std::span<const int> images() const { return images_; }

  /// One-line notation padded with fixed points to length N (N >= size()).
  std::vector<int> window(int N) const;

  bool is_identity() const { return images_.empty(); }

  /// "4132" when the window fits in nine digits, otherwise "4,1,3,2,...".
  /// Printed in S_max(N, size()); the identity prints as "1" by default.
  std::string to_string(int N = 1) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

Permutation operator*(const Permutation& u, const Permutation& v);

/// A weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws InvalidPartition on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

int length(const Permutation& w);
std::vector<int> descents(const Permutation& w);
Permutation inverse(const Permutation& w);

Permutation simple_reflection(int i);
Permutation longest_element(int N);

/// 1^m x w: fixes 1..m and sends j to w(j-m)+m.
Permutation embed_shift(const Permutation& w, int m);

/// w0 * w^{-1} * w0 with w0 the longest element of S_N.
Permutation hat(const Permutation& w, int N);

/// The Grassmannian permutation w(i) = i + lambda_{k+1-i} for i <= k,
/// increasing elsewhere.
Permutation grassmannian_for_partition(const Partition& lambda, int k);

/// True iff w is in S_{k+l}, every descent of w is <= l and every descent of
/// w^{-1} is <= k.
bool is_partial_permutation(const Permutation& w, int k, int l);

/// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// A reduced word (rightmost letter applied first) obtained by descent
/// stripping.
std::vector<int> reduced_word(const Permutation& w);

/// All of S_N in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int N);

/// All partitions of `weight` with at most `max_rows` rows, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_rows);

}  // namespace quiverk

template <>
struct std::hash<quiverk::Permutation> {
  std::size_t operator()(const quiverk::Permutation& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : w.images()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
