#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "linkform/cochains.hpp"
#include "linkform/complex.hpp"
#include "linkform/lattice.hpp"
#include "linkform/reduction.hpp"

namespace linkform {

class Space;

// H^k(K; R) as Z^free_rank + sum Z/torsion[i], with one cocycle per summand.
struct CohomologyGroup {
    int degree = 0;
    Ring ring;
    int free_rank = 0;
    std::vector<std::int64_t> torsion; // ascending, all > 1
    std::vector<Cochain> generators;   // free summands first

    std::size_t rank() const { return generators.size(); }
    // 0 for a free summand.
    std::int64_t order(std::size_t j) const;
    bool is_zero() const { return generators.empty(); }
    // Lattice of coordinate vectors representing zero.
    linalg::Lattice relations() const;
    // Number of elements, or 0 if infinite.
    std::int64_t size() const;

    // Coordinates of the class of a cocycle; throws NotACocycle.
    std::vector<std::int64_t> express(const Space& space, const Cochain& z) const;

    // Presentation data in terms of the reduced complex.
    std::vector<std::vector<Integer>> kernel_change;  // V from the SNF of delta'_k
    std::vector<std::size_t> kept;                    // kernel coordinates used
    std::vector<Integer> kernel_scale;                // s_i for kept coordinates
    std::vector<std::vector<Integer>> summand_change; // rows of U2^{-1} for kept summands
};

struct CohomologyClass {
    int degree = 0;
    Ring ring;
    std::vector<std::int64_t> coords;
    Cochain rep;
};

// A simplicial complex with its face index and cochain reduction, plus a
// cache of cohomology groups. Safe to share between threads.
class Space {
public:
    explicit Space(SimplicialComplex k);

    const SimplicialComplex& complex() const { return complex_; }
    const SimplexIndex& index() const { return *index_; }
    const ChainReduction& reduction() const { return *reduction_; }
    int dimension() const { return complex_.dimension; }

    // 0 <= k <= dim + 1; degree dim + 1 is the zero group.
    const CohomologyGroup& cohomology(Ring ring, int k) const;

private:
    SimplicialComplex complex_;
    std::unique_ptr<SimplexIndex> index_;
    std::unique_ptr<ChainReduction> reduction_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::int64_t, int>, std::unique_ptr<CohomologyGroup>> cache_;
};

CohomologyGroup compute_cohomology(const Space& space, Ring ring, int k);

CohomologyClass class_from_coords(const Space& space, Ring ring, int k, std::vector<std::int64_t> coords);
CohomologyClass class_of(const Space& space, const Cochain& z);
CohomologyClass zero_class(const Space& space, Ring ring, int k);
CohomologyClass add(const Space& space, const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass scale(const Space& space, const CohomologyClass& a, std::int64_t c);
bool is_zero(const CohomologyClass& x);
bool same_class(const CohomologyClass& a, const CohomologyClass& b);

// Some y with delta y = z, or nothing if z is not a coboundary.
std::optional<Cochain> solve_coboundary(const Space& space, const Cochain& z);

// Short exact sequences of coefficient rings used by connecting maps.
struct SesSpec {
    enum class Kind {
        Doubling,        // 0 -> Z/2^n -> Z/2^{2n} -> Z/2^n -> 0
        Integral,        // 0 -> Z -> Z -> Z/2^n -> 0
        TwoToPower,      // 0 -> Z/2^n -> Z/2^{n+1} -> Z/2 -> 0
        TwoToFour,       // 0 -> Z/2 -> Z/4 -> Z/2 -> 0
    };
    Kind kind = Kind::Doubling;
    int n = 1;

    static SesSpec doubling(int n) { return {Kind::Doubling, n}; }
    static SesSpec integral(int n) { return {Kind::Integral, n}; }
    static SesSpec two_to_power(int n) { return {Kind::TwoToPower, n}; }
    static SesSpec two_to_four() { return {Kind::TwoToFour, 1}; }

    Ring sub() const;
    Ring middle() const;
    Ring quotient() const;
    // Injection sub -> middle is multiplication by this factor.
    std::int64_t factor() const;
};

CohomologyClass connecting(const Space& space, const SesSpec& ses, const CohomologyClass& x);

// Reduction Z -> Z/m or Z/m -> Z/m' (m' | m), or the inclusion
// Z/m -> Z/m' (m | m') multiplying by m'/m.
CohomologyClass change_coeffs(const Space& space, const CohomologyClass& x, Ring target);

// Coefficientwise lift of the representative to Z with values in [0, m).
Cochain integral_rep(const CohomologyClass& x);

// Every element of the group if it has at most `cap` elements; otherwise
// the generators and their pairwise sums.
std::vector<CohomologyClass> sample_elements(const Space& space, const CohomologyGroup& g, std::size_t cap);

} // namespace linkform
