// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linkform/bss.hpp"
#include "linkform/checks.hpp"
#include "linkform/duality.hpp"
#include "linkform/gf2.hpp"
#include "linkform/snf.hpp"
#include "linkform/steenrod.hpp"
#include "oracles.hpp"

using namespace linkform;

namespace {

constexpr double limit_cochains = 300;
constexpr double limit_axioms = 300;
constexpr double limit_projective = 600;
constexpr double limit_verdict = 1800;
constexpr double limit_snf = 120;

constexpr std::uint64_t seed = 20240601;
// Groups up to this size are enumerated completely.
constexpr std::size_t all_elements = 1 << 12;

const std::vector<std::string> contract_fixtures{"S1", "S2", "S5", "T2", "RP2", "RP3", "RP5", "L41", "L81", "S2xL41"};
const std::vector<std::string> dim5_fixtures{"S5", "RP5", "S2xL41", "S2xL81", "RP3xT2"};

const Ring z2 = Ring::mod(2);

Ring two_power(int n)
{
    return Ring::mod(std::int64_t{1} << n);
}

class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checked_;
        if (!ok) {
            if (failed_ == 0)
                first_ = what();
            ++failed_;
        }
    }
    void absorb(const SuiteResult& r, const std::string& where, const std::function<bool(const std::string&)>& keep)
    {
        for (const auto& c : r.checks) {
            if (!keep(c.name))
                continue;
            checked_ += c.checked;
            if (c.failed && failed_ == 0)
                first_ = where + " " + c.name + ": " + c.counterexample;
            failed_ += c.failed;
        }
    }
    std::size_t checked() const { return checked_; }
    std::size_t failed() const { return failed_; }
    const std::string& first() const { return first_; }

private:
    std::size_t checked_ = 0, failed_ = 0;
    std::string first_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int criterion, const std::string& title, const Tally& t, double elapsed, double limit)
{
    const bool ok = t.failed() == 0 && t.checked() > 0 && (limit <= 0 || elapsed <= limit);
    failures += !ok;
    std::printf("criterion %2d %s  %s: %zu checks, %zu failed, %.1f s", criterion, ok ? "PASS" : "FAIL", title.c_str(),
                t.checked(), t.failed(), elapsed);
    if (limit > 0)
        std::printf(" (limit %.0f s)", limit);
    std::printf("\n");
    if (t.failed())
        std::printf("             first failure: %s\n", t.first().c_str());
    else if (t.checked() == 0)
        std::printf("             nothing was checked\n");
    std::fflush(stdout);
}

} // namespace

int main()
{
    // 1. Coboundary formula for cup-i on random cochains.
    {
        const auto t0 = Clock::now();
        Tally t;
        SuiteOptions opt;
        opt.pairs_per_degree = 50;
        opt.max_cup_index = 4;
        opt.moduli = {2, 4, 8};
        for (const auto& name : contract_fixtures)
            t.absorb(check_cochain_identities(oracle::fixture(name), seed, opt), name, [](auto&) { return true; });
        report(1, "cochain contract", t, seconds_since(t0), limit_cochains);
    }

    // 2 and 4 share one axiom run: squares over Z/2 for criterion 2,
    // generalized squares over Z/2^n for criterion 4.
    Tally generalized;
    double generalized_elapsed = 0;
    {
        const auto t0 = Clock::now();
        Tally axioms;
        SuiteOptions opt;
        opt.n_max = 3;
        opt.sample_cap = all_elements;
        opt.suspension_max_dim = 2;
        auto is_generalized = [](const std::string& n) { return n.find("generalized square") != std::string::npos; };
        for (const auto& name : contract_fixtures) {
            const auto r = check_axioms(oracle::fixture(name), opt);
            axioms.absorb(r, name, [&](const std::string& n) { return !is_generalized(n); });
            generalized.absorb(r, name, is_generalized);
        }
        generalized_elapsed = seconds_since(t0);
        report(2, "Steenrod axioms", axioms, generalized_elapsed, limit_axioms);
    }

    // 3. Projective spaces against the binomial table.
    {
        const auto t0 = Clock::now();
        Tally t;
        for (int n = 1; n <= 5; ++n) {
            const auto& s = oracle::fixture("RP" + std::to_string(n));
            const auto a = oracle::rp_powers(s);
            for (int j = 0; j <= n; ++j) {
                t.expect(!is_zero(a[j]), [&] { return "RP" + std::to_string(n) + " a^" + std::to_string(j) + " = 0"; });
                for (int i = 0; i + j <= n; ++i) {
                    const auto expected = oracle::binomial_mod2(j, i) ? a[i + j] : zero_class(s, z2, i + j);
                    t.expect(same_class(sq(s, i, a[j]), expected), [&] {
                        return "RP" + std::to_string(n) + " Sq^" + std::to_string(i) + " a^" + std::to_string(j);
                    });
                }
            }
        }
        const auto& rp5 = oracle::fixture("RP5");
        const auto a = oracle::rp_powers(rp5);
        const auto wu = wu_classes(rp5);
        const auto w = sw_from_wu(rp5, wu);
        for (int k = 0; k <= 5; ++k) {
            // v = 1 + a^2; w = (1 + a)^6 truncated.
            const bool v_term = k == 0 || k == 2;
            t.expect(same_class(wu.v[k], v_term ? a[k] : zero_class(rp5, z2, k)),
                     [&] { return "RP5 v_" + std::to_string(k); });
            t.expect(same_class(w[k], oracle::binomial_mod2(6, k) ? a[k] : zero_class(rp5, z2, k)),
                     [&] { return "RP5 w_" + std::to_string(k); });
        }
        report(3, "projective space regression", t, seconds_since(t0), limit_projective);
    }

    report(4, "generalized squares", generalized, generalized_elapsed, limit_axioms);

    // 5. Secondary Bockstein of 2^{n-1} x^2 on every even-degree class x
    // with 2|x| + 1 <= dim.
    {
        const auto t0 = Clock::now();
        Tally t;
        for (const auto& name : dim5_fixtures) {
            const auto& s = oracle::fixture(name);
            for (int n = 1; n <= 2; ++n)
                for (int k = 0; 4 * k + 1 <= s.dimension(); ++k)
                    for (const auto& x : sample_elements(s, s.cohomology(two_power(n), 2 * k), all_elements)) {
                        const auto sq2 = scale(s, cup(s, x, x), std::int64_t{1} << (n - 1));
                        const auto bx = connecting(s, SesSpec::doubling(n), x);
                        const auto rhs = add(s, cup(s, x, bx), scale(s, gen_sq(s, 2 * k, bx), -1));
                        t.expect(beta2(s, sq2) == coset_of(s, rhs),
                                 [&] { return name + " n=" + std::to_string(n) + " " + describe(x); });
                    }
        }
        report(5, "secondary Bockstein of 2^(n-1) x^2", t, seconds_since(t0), 0);
    }

    // 6. x cup beta(x) = gen_sq^{2d}(beta(x)) on every x in H^2(K; Z/2^n).
    {
        const auto t0 = Clock::now();
        Tally t;
        for (const auto& name : {"S5", "RP5", "S2xL41"}) {
            const auto& s = oracle::fixture(name);
            for (int n = 1; n <= 3; ++n)
                for (const auto& x : sample_elements(s, s.cohomology(two_power(n), 2), all_elements)) {
                    const auto bx = connecting(s, SesSpec::doubling(n), x);
                    t.expect(same_class(cup(s, x, bx), gen_sq(s, 2, bx)),
                             [&] { return std::string(name) + " n=" + std::to_string(n) + " " + describe(x); });
                }
        }
        report(6, "x cup beta(x) = gen_sq(beta(x))", t, seconds_since(t0), 0);
    }

    // 7. Mod 2 Bockstein spectral sequence of L(2^k, 1).
    {
        const auto t0 = Clock::now();
        Tally t;
        for (int k = 1; k <= 3; ++k) {
            const auto& s = oracle::fixture(k == 1 ? "L21" : "L" + std::to_string(1 << k) + "1");
            const auto where = [&](const std::string& what) { return "L(" + std::to_string(1 << k) + ",1) " + what; };
            // Torsion order from the unreduced integer SNF.
            const auto orders = oracle::cohomology_orders(s.complex(), 0, 2);
            t.expect(orders == std::vector<std::int64_t>{1 << k}, [&] { return where("H^2(Z) is not Z/2^k"); });
            for (int r = 1; r <= k + 1; ++r) {
                const auto page = bss_page(s, 1, r);
                const std::string at = "page " + std::to_string(r);
                t.expect(page.length(2) == (r <= k ? 1 : 0), [&] { return where(at + " length of degree 2"); });
                t.expect(page.differential_length(1) == (r == k ? 1 : 0),
                         [&] { return where(at + " d_r into degree 2"); });
                if (r == k)
                    t.expect(page.pieces[1].lift_orders == std::vector<std::int64_t>{1 << k},
                             [&] { return where(at + " lift order"); });
                t.expect(check_bss_page(s, 1, r).empty(), [&] { return where(at + " consistency"); });
            }
        }
        report(7, "Bockstein spectral sequence of L(2^k,1)", t, seconds_since(t0), 0);
    }

    // 8. Skew-symmetry, top Bockstein vanishing, linking form = aux / 2^n.
    {
        const auto t0 = Clock::now();
        Tally t;
        SuiteOptions opt;
        opt.n_max = 3;
        opt.sample_cap = all_elements;
        for (const auto& name : dim5_fixtures)
            t.absorb(check_pairing(oracle::fixture(name), opt), name, [](auto&) { return true; });
        report(8, "pairing suite", t, seconds_since(t0), 0);
    }

    // 9. Alternation against integral lifting of the Wu class.
    {
        const auto t0 = Clock::now();
        Tally t;
        for (const auto& name : dim5_fixtures) {
            const auto rec = theorem73_verdict(oracle::fixture(name), 3, all_elements);
            t.expect(rec.consistent, [&] { return name + " verdict INCONSISTENT"; });
            t.expect(rec.failures.empty(), [&] { return name + " " + rec.failures.front(); });
            for (const auto& level : rec.levels)
                for (const auto& [identity, ok] : level.identities)
                    t.expect(ok, [&] { return name + " n=" + std::to_string(level.n) + " " + identity; });
            if (name == "RP5") {
                t.expect(rec.all_alternating, [] { return std::string("RP5 not alternating"); });
                t.expect(rec.lifts, [] { return std::string("RP5 Wu class does not lift"); });
            }
        }
        report(9, "alternation iff the Wu class lifts", t, seconds_since(t0), limit_verdict);
    }

    // 10. Smith normal form on sparse random matrices.
    {
        const auto t0 = Clock::now();
        Tally t;
        std::mt19937_64 rng(seed);
        for (int it = 0; it < 1000; ++it) {
            const auto a = oracle::random_sparse_matrix(rng, 200);
            const auto s = linalg::smith_normal_form(a);
            const auto where = [&](const std::string& what) {
                return "matrix " + std::to_string(it) + " (" + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + "): " + what;
            };
            t.expect(s.U * s.D * s.V == a, [&] { return where("A != U D V"); });
            t.expect(s.U * s.U_inv == linalg::IntMatrix::identity(a.rows()), [&] { return where("U not unimodular"); });
            t.expect(s.V_inv * s.V == linalg::IntMatrix::identity(a.cols()), [&] { return where("V not unimodular"); });
            bool chain = true;
            for (std::size_t i = 0; i < s.diagonal.size(); ++i)
                chain = chain && s.diagonal[i] > 0 && (i == 0 || s.diagonal[i] % s.diagonal[i - 1] == 0);
            t.expect(chain, [&] { return where("divisibility chain"); });
            std::size_t odd = 0;
            for (const auto& d : s.diagonal)
                odd += d % 2 != 0;
            t.expect(linalg::rank_gf2(a) == odd, [&] { return where("rank_gf2 differs from the SNF parity rank"); });
        }
        report(10, "Smith normal form round trip", t, seconds_since(t0), limit_snf);
    }

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
