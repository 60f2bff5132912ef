#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkform/cohomology.hpp"

namespace linkform {

// Cup pairing H^k x H^{dim-k} -> R on generators: entry (i, j) integrates
// g_i cup h_j. Over Z only the free summands are paired.
struct CupPairing {
    int degree = 0;
    std::vector<std::vector<std::int64_t>> matrix;
    bool perfect = false;
};

struct DualityCertificate {
    int dimension = 0;
    Ring ring;
    CohomologyClass fundamental;
    std::vector<CupPairing> pairings; // degrees 0 .. dim
};

struct DualityCheck {
    std::optional<DualityCertificate> certificate;
    int failing_degree = -1;
    std::string reason;
};

DualityCheck check_duality(const Space& space, Ring ring);
// Throws NotPoincareDuality with the first failing degree.
DualityCertificate duality_certificate(const Space& space, Ring ring);

// Coordinate of a top-degree class against the fundamental class.
std::int64_t integrate(const Space& space, const DualityCertificate& cert, const CohomologyClass& x);

// Element k / 2^s of Q/Z, reduced: 0 <= k < 2^s and k odd unless s = 0.
struct DyadicFraction {
    std::int64_t num = 0;
    int exp = 0;

    static DyadicFraction make(const Integer& num, int exp);
    bool operator==(const DyadicFraction&) const = default;
    DyadicFraction operator+(const DyadicFraction& o) const;
    DyadicFraction operator-() const;
    bool is_zero() const { return num == 0; }
    std::string str() const;
};

struct PairingMatrix {
    int n = 1;
    int degree = 0;
    // Auxiliary pairing: entries in Z/2^n. Linking form: empty.
    std::vector<std::vector<std::int64_t>> gram;
    // Linking form: entries in Q/Z. Auxiliary pairing: empty.
    std::vector<std::vector<DyadicFraction>> fractions;
    std::vector<CohomologyClass> basis;
    std::vector<std::int64_t> basis_orders;
    bool skew = false;
    bool alternating = false;
    bool symmetric = false;

    std::size_t size() const { return basis.size(); }
};

// <x, y>_n = integral of x cup beta(y) on H^{2d}(K; Z/2^n), dim K = 4d + 1,
// beta the Bockstein of 0 -> Z/2^n -> Z/2^{2n} -> Z/2^n -> 0. Throws
// ParityError for other dimensions and NotPoincareDuality without duality.
PairingMatrix aux_pairing(const Space& space, int n);

// Linking form on the 2^n-torsion of H^{2d+1}(K; Z), transported from the
// auxiliary pairing through preimages under the integral Bockstein. The
// result is recomputed with shifted preimages and a mismatch raises
// std::logic_error.
PairingMatrix linking_form(const Space& space, int n);

// Linking form evaluated directly from integral cochains: for a of order t,
// t a = delta c and lk(a, b) = (1/t) integral of c cup b. Works in any odd
// dimension 2d + 1, on the given classes of H^{d+1}(K; Z).
DyadicFraction linking_number(const Space& space, const DualityCertificate& integral_cert, const CohomologyClass& a,
                              const CohomologyClass& b);
// The same on the generators of the 2-primary torsion of H^{d+1}(K; Z).
PairingMatrix classical_linking_form(const Space& space);

// True when the Gram matrix defines an injective map T -> Hom(T, Q/Z).
bool linking_nondegenerate(const PairingMatrix& lk);

struct WuClasses {
    std::vector<CohomologyClass> v; // v[i] in H^i(K; Z/2), i = 0 .. dim
};

WuClasses wu_classes(const Space& space);
// Total Stiefel-Whitney class w = Sq v, by degree.
std::vector<CohomologyClass> sw_from_wu(const Space& space, const WuClasses& wu);

struct WuLiftObstruction {
    int degree = 0;                      // d for dim = 2d + 1
    CohomologyClass v;                   // v_d
    CohomologyClass beta_tilde;          // in H^{d+1}(K; Z)
    std::vector<CohomologyClass> beta_2n; // beta_{2,2^n}(v_d) for n = 1 .. n_max
    bool lifts = false;
};

WuLiftObstruction wu_lift_obstruction(const Space& space, const WuClasses& wu, int n_max);

// Per-level data of the alternation criterion.
struct VerdictLevel {
    int n = 1;
    bool alternating = false;
    bool skew = false;
    bool obstruction_vanishes = false; // beta_{2,2^n}(v) = 0
    // Each identity in the chain from x cup beta(x) to the lifting
    // obstruction, checked on every sampled x in H^{2d}(K; Z/2^n).
    std::vector<std::pair<std::string, bool>> identities;
    std::size_t samples = 0;
};

struct Theorem73Record {
    int dimension = 0;
    int n_max = 0;
    std::vector<VerdictLevel> levels;
    bool all_alternating = false;
    bool lifts = false;
    bool linking_alternating = false; // from the cochain-level linking form
    bool n_max_covers_torsion = false;
    bool consistent = false;
    std::vector<std::string> failures;
};

// Compares alternation of the auxiliary pairing for n <= n_max with the
// integral lifting of the middle Wu class. dim must be 1 mod 4.
Theorem73Record theorem73_verdict(const Space& space, int n_max, std::size_t sample_cap = 64);

} // namespace linkform
