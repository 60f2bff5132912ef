#pragma once

#include <cstdint>
#include <vector>

#include "linkform/int_matrix.hpp"

namespace linkform::linalg {

// A = U * D * V with U, V unimodular and D diagonal with d_0 | d_1 | ... .
// U_inv and V_inv are carried along because every consumer needs them.
struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::vector<Integer> diagonal; // nonzero invariant factors, ascending
    std::size_t rank() const { return diagonal.size(); }
};

// Pivot rule: smallest nonzero absolute value, ties broken by lowest
// (row, col) of the working matrix.
SnfResult smith_normal_form(const IntMatrix& a);

// Diagonal only; skips the transform bookkeeping.
std::vector<Integer> invariant_factors(const IntMatrix& a);

// Some x with A x = b (mod m); m == 0 means over the integers. Free
// parameters in SNF coordinates are set to zero, so the answer is
// deterministic. Throws NoSolution or DimensionMismatch.
std::vector<Integer> solve_mod(const IntMatrix& a, const std::vector<Integer>& b, const Integer& m);
std::vector<Integer> solve_mod(const SnfResult& snf, const std::vector<Integer>& b, const Integer& m);

// Generators of {x : A x = 0 (mod m)} as a subgroup of (Z/m)^cols
// (or Z^cols for m == 0).
std::vector<std::vector<Integer>> kernel_mod(const IntMatrix& a, const Integer& m);
std::vector<std::vector<Integer>> kernel_mod(const SnfResult& snf, const Integer& m);

} // namespace linkform::linalg
