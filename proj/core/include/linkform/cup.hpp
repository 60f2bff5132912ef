#pragma once

#include <vector>

#include "linkform/cochains.hpp"

namespace linkform {

// One summand of the cup-i product on an n-simplex: u is evaluated on the
// face at positions umask, v on the face at positions vmask.
struct CupTerm {
    unsigned umask;
    unsigned vmask;
    int sign;
};

// Terms of u cup_i v on an n-simplex with |u| = p. Cut points
// 0 <= j_0 < ... < j_i <= n split [0, n] into intervals [0, j_0], [j_0, j_1],
// ..., [j_i, n]; u takes the even-numbered intervals and v the odd ones.
// The sign is (-1)^(inv(W ++ U) + p q + [i even] q) where U lists u's
// positions, W lists v's positions that are not cut points, and inv counts
// inversions of the concatenation. For i = 0 this is the Alexander-Whitney
// product.
std::vector<CupTerm> cup_terms(int n, int i, int p);

// Steenrod cup-i product; cup_{-1} is zero. Both cochains must share a ring.
Cochain cup_i(const SimplexIndex& idx, const Cochain& u, const Cochain& v, int i);
Cochain cup(const SimplexIndex& idx, const Cochain& u, const Cochain& v);

} // namespace linkform
