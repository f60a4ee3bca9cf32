#include "quiverk/perm.hpp"

#include <algorithm>
#include <numeric>

#include "quiverk/errors.hpp"

namespace quiverk {

namespace {

void trim(std::vector<int>& images) {
  while (!images.empty() && images.back() == static_cast<int>(images.size())) images.pop_back();
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > static_cast<int>(images_.size()) || seen[x])
      throw InvalidPermutation("one-line images are not a bijection of 1..N");
    seen[x] = true;
  }
  trim(images_);
}

Permutation Permutation::from_string(std::string_view digits) {
  std::vector<int> images;
  for (char c : digits) {
    if (c < '1' || c > '9') throw InvalidPermutation("bad digit in permutation string");
    images.push_back(c - '0');
  }
  return Permutation(std::move(images));
}

std::vector<int> Permutation::window(int N) const {
  std::vector<int> out(std::max(N, size()));
  for (int i = 1; i <= static_cast<int>(out.size()); ++i) out[i - 1] = (*this)(i);
  return out;
}

std::string Permutation::to_string(int N) const {
  auto w = window(std::max(N, 1));
  std::string out;
  bool compact = w.size() <= 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  int n = std::max(u.size(), v.size());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = u(v(i));
  return Permutation(std::move(out));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidPartition("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

int length(const Permutation& w) {
  auto img = w.images();
  int inv = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inv;
  return inv;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

Permutation inverse(const Permutation& w) {
  std::vector<int> out(w.size());
  for (int i = 1; i <= w.size(); ++i) out[w(i) - 1] = i;
  return Permutation(std::move(out));
}

Permutation simple_reflection(int i) {
  if (i < 1) throw IndexOutOfRange("simple reflection index must be >= 1");
  std::vector<int> out(i + 1);
  std::iota(out.begin(), out.end(), 1);
  std::swap(out[i - 1], out[i]);
  return Permutation(std::move(out));
}

Permutation longest_element(int N) {
  if (N < 1) throw IndexOutOfRange("longest_element needs N >= 1");
  std::vector<int> out(N);
  for (int i = 0; i < N; ++i) out[i] = N - i;
  return Permutation(std::move(out));
}

Permutation embed_shift(const Permutation& w, int m) {
  if (w.is_identity()) return w;
  std::vector<int> out(m + w.size());
  for (int j = 1; j <= m; ++j) out[j - 1] = j;
  for (int j = m + 1; j <= m + w.size(); ++j) out[j - 1] = w(j - m) + m;
  return Permutation(std::move(out));
}

Permutation hat(const Permutation& w, int N) {
  if (w.size() > N) throw WindowTooSmall("permutation moves a point beyond N=" + std::to_string(N));
  auto inv = inverse(w);
  std::vector<int> out(N);
  for (int i = 1; i <= N; ++i) out[i - 1] = N + 1 - inv(N + 1 - i);
  return Permutation(std::move(out));
}

Permutation grassmannian_for_partition(const Partition& lambda, int k) {
  if (lambda.rows() > k)
    throw TooManyParts("partition " + lambda.to_string() + " has more than " + std::to_string(k) + " parts");
  if (lambda.empty()) return {};
  int n = k + lambda[0];
  std::vector<int> out(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    out[i - 1] = i + lambda[k - i];
    used[out[i - 1]] = true;
  }
  int next = 1;
  for (int i = k + 1; i <= n; ++i) {
    while (used[next]) ++next;
    out[i - 1] = next;
    used[next] = true;
  }
  return Permutation(std::move(out));
}

bool is_partial_permutation(const Permutation& w, int k, int l) {
  if (w.size() > k + l) return false;
  for (int d : descents(w))
    if (d > l) return false;
  for (int d : descents(inverse(w)))
    if (d > k) return false;
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  int n = std::max(u.size(), w.size());
  // Running counts #{i <= p : x(i) <= q} for q = 1..n.
  std::vector<int> cu(n + 1, 0), cw(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    for (int q = u(p); q <= n; ++q) ++cu[q];
    for (int q = w(p); q <= n; ++q) ++cw[q];
    for (int q = 1; q <= n; ++q)
      if (cu[q] < cw[q]) return false;
  }
  return true;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  while (!cur.is_identity()) {
    int d = descents(cur).back();
    word.push_back(d);
    cur = cur * simple_reflection(d);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Permutation> all_permutations(int N) {
  std::vector<int> img(std::max(N, 0));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(weight, weight, max_rows, cur, out);
  return out;
}

}  // namespace quiverk
