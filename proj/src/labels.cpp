#include "quiverk/labels.hpp"

#include <algorithm>
#include <numeric>

#include "quiverk/errors.hpp"

namespace quiverk {

int prefix_dim(const DimensionVector& e, int i) {
  int n = static_cast<int>(e.size()) - 1;
  int s = 0;
  for (int k = 0; k <= std::min(i, n); ++k) s += e[k];
  return s;
}

int suffix_dim(const DimensionVector& e, int j) {
  int n = static_cast<int>(e.size()) - 1;
  int s = 0;
  for (int k = std::max(j, 0); k <= n; ++k) s += e[k];
  return s;
}

int total_dim(const DimensionVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

VariableId block_var(Alphabet alphabet, const DimensionVector& e, int i, int j) {
  if (i < 0 || i >= static_cast<int>(e.size()) || j < 1 || j > e[i])
    throw IndexOutOfRange("block variable " + std::to_string(i) + "_" + std::to_string(j) +
                          " outside the dimension vector");
  return {alphabet, prefix_dim(e, i - 1) + j};
}

std::vector<VariableId> block_labels(Alphabet alphabet, const DimensionVector& e) {
  std::vector<VariableId> out;
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    for (int j = 1; j <= e[i]; ++j) out.push_back(block_var(alphabet, e, i, j));
  return out;
}

std::vector<VariableId> reversed_block_labels(Alphabet alphabet, const DimensionVector& e) {
  std::vector<VariableId> out;
  for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i)
    for (int j = 1; j <= e[i]; ++j) out.push_back(block_var(alphabet, e, i, j));
  return out;
}

VariableNamer blocked_namer(const DimensionVector& e) {
  return [e](VariableId v) {
    int idx = v.index;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (idx <= e[i])
        return (v.alphabet == Alphabet::a ? "a" : "b") + std::to_string(i) + "_" + std::to_string(idx);
      idx -= e[i];
    }
    return flat_name(v);
  };
}

std::vector<Label> as_labels(const std::vector<VariableId>& vars) {
  return {vars.begin(), vars.end()};
}

}  // namespace quiverk
