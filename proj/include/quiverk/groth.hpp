#pragma once

#include <map>
#include <span>

#include "quiverk/perm.hpp"
#include "quiverk/poly.hpp"

namespace quiverk {

using StableExpansion = std::map<Partition, Integer>;

/// prod over p + q <= N of (1 - b_p/a_q).
LaurentPoly groth_top(int N);

/// Double Grothendieck polynomial of w in S_N by divided differences from
/// groth_top(N). Memoized per N; safe to call from several threads.
LaurentPoly groth_ls(const Permutation& w, int N);

/// G_w(a_1..a_q; b_1..b_p): the double Grothendieck polynomial of 1^m x w with
/// every variable past the first q (resp. p) set to 1. m defaults to max(p, q).
LaurentPoly stable_groth(const Permutation& w, int q_vars, int p_vars);
LaurentPoly stable_groth(const Permutation& w, int q_vars, int p_vars, int m);

/// Same as stable_groth with arbitrary variables in place of a_1..a_q and
/// b_1..b_p.
LaurentPoly stable_groth_labeled(const Permutation& w, std::span<const VariableId> top,
                                 std::span<const VariableId> side);

/// G_lambda = G_{w_lambda}.
LaurentPoly stable_groth_partition(const Partition& lambda, int q_vars, int p_vars);

/// G_w evaluated with b = 1, written in x_q = 1 - 1/a_q for q = 1..k; the
/// variable a_q stands for x_q in the result.
LaurentPoly stable_groth_single(const Permutation& w, int k);

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Partition& mu);

/// Coefficients c_{w,lambda} with G_w = sum c_{w,lambda} G_lambda. Throws
/// StabilizationFailure if no variable count up to the internal cap gives a
/// consistent answer.
StableExpansion expand_stable(const Permutation& w);

}  // namespace quiverk
