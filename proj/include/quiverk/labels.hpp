#pragma once

#include <optional>
#include <vector>

#include "quiverk/poly.hpp"

namespace quiverk {

/// Dimension vector (e_0, ..., e_n). Entries are non-negative; user-facing
/// rank conditions additionally require them to be positive.
using DimensionVector = std::vector<int>;

/// Label of one string of a staircase diagram. nullopt stands for the
/// constant 1.
using Label = std::optional<VariableId>;

/// e_0 + ... + e_i, and 0 for i < 0.
int prefix_dim(const DimensionVector& e, int i);
/// e_j + ... + e_n, and 0 for j > n.
int suffix_dim(const DimensionVector& e, int j);
int total_dim(const DimensionVector& e);

/// The blocked variable x^i_j (j = 1..e_i) as a flat variable
/// x_{e_0 + ... + e_{i-1} + j}.
VariableId block_var(Alphabet alphabet, const DimensionVector& e, int i, int j);

/// (x^0, x^1, ..., x^n) flattened.
std::vector<VariableId> block_labels(Alphabet alphabet, const DimensionVector& e);
/// (x^n, ..., x^0) flattened; blocks are reversed, positions inside a block
/// keep ascending order.
std::vector<VariableId> reversed_block_labels(Alphabet alphabet, const DimensionVector& e);

/// Renders flat variables by their block position, e.g. a0_1, b2_1.
VariableNamer blocked_namer(const DimensionVector& e);

std::vector<Label> as_labels(const std::vector<VariableId>& vars);

}  // namespace quiverk
