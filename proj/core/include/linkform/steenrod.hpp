#pragma once

#include <cstdint>
#include <vector>

#include "linkform/cohomology.hpp"
#include "linkform/lattice.hpp"

namespace linkform {

CohomologyClass cup(const Space& space, const CohomologyClass& x, const CohomologyClass& y);

// Sq^i over Z/2: the class of u cup_{r-i} u for |x| = r; zero for i < 0 or
// i > r.
CohomologyClass sq(const Space& space, int i, const CohomologyClass& x);

// Generalised square over Z/2^n: 2^{n-1} (u cup_{r-i} u) for even i and
// u cup_{r-i} u for odd i.
CohomologyClass gen_sq(const Space& space, int i, const CohomologyClass& x);

// Exponent n of a ring Z/2^n; throws for anything else.
int two_power_exponent(Ring ring);

// An element of H^k(K; Z/2^n) / im(beta), beta the Bockstein of
// 0 -> Z/2^n -> Z/2^{2n} -> Z/2^n -> 0. `canonical` is the reduced
// coordinate vector, so equal cosets have equal canonical vectors.
struct Coset {
    int degree = 0;
    Ring ring;
    std::vector<std::int64_t> canonical;
    CohomologyClass representative;

    bool operator==(const Coset& other) const
    {
        return degree == other.degree && ring == other.ring && canonical == other.canonical;
    }
};

// Lattice of coordinates of im(beta) + relations in H^k(K; Z/2^n).
linalg::Lattice bockstein_image(const Space& space, int n, int k);
Coset coset_of(const Space& space, const CohomologyClass& y);

// Secondary Bockstein on ker(beta) in H^k(K; Z/2^n). The result is computed
// twice with different cochain lifts and the two cosets are compared; a
// mismatch raises std::logic_error. Throws NotInKernel when beta(x) != 0.
Coset beta2(const Space& space, const CohomologyClass& x);
// One evaluation with lifts perturbed by the given seed (0: canonical lifts).
Coset beta2_with_lift(const Space& space, const CohomologyClass& x, std::uint64_t seed);

} // namespace linkform
