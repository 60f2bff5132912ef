#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkform/cohomology.hpp"

namespace linkform {

struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string counterexample; // first failure
    bool passed() const { return failed == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> skipped;

    bool passed() const;
    std::size_t checked() const;
    std::size_t failed() const;
    // First failing check, or null.
    const CheckResult* first_failure() const;
};

struct SuiteOptions {
    int n_max = 3;
    std::size_t pairs_per_degree = 50;
    int max_cup_index = 4;
    std::vector<std::int64_t> moduli{2, 4, 8};
    std::size_t sample_cap = 64;
    int bss_n_max = 2;
    int bss_pages = 4;
    // Suspension stability builds the suspension; skipped above this dimension.
    int suspension_max_dim = 3;
};

const std::vector<std::string>& suite_names();

// Coboundary formula for cup-i on random cochain pairs.
SuiteResult check_cochain_identities(const Space& space, std::uint64_t seed, const SuiteOptions& opt = {});
// Steenrod axioms, Cartan, Adem, generalized squares, stability.
SuiteResult check_axioms(const Space& space, const SuiteOptions& opt = {});
// Skew-symmetry, top Bockstein vanishing, x cup beta(x) identity, the
// linking form as the transported auxiliary pairing. Throws ParityError
// unless dim = 1 mod 4.
SuiteResult check_pairing(const Space& space, const SuiteOptions& opt = {});
// Page consistency, lift orders of nonzero differentials, and the
// secondary Bockstein of 2^{n-1} x^2.
SuiteResult check_bss(const Space& space, const SuiteOptions& opt = {});
// Alternation against Wu class lifting, plus Wu class sanity. Throws
// ParityError unless dim = 1 mod 4.
SuiteResult check_theorem73(const Space& space, const SuiteOptions& opt = {});

// Runs a suite by name; "all" runs every applicable one and records the
// others as skipped. Throws ValidationError for unknown names.
std::vector<SuiteResult> run_suite(const Space& space, const std::string& name, std::uint64_t seed,
                                   const SuiteOptions& opt = {});

std::string describe(const CohomologyClass& x);

} // namespace linkform
