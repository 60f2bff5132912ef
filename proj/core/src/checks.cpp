#include "linkform/checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "linkform/bss.hpp"
#include "linkform/cup.hpp"
#include "linkform/duality.hpp"
#include "linkform/errors.hpp"
#include "linkform/steenrod.hpp"

namespace linkform {

namespace {

class Recorder {
public:
    explicit Recorder(SuiteResult& suite) : suite_(suite) {}

    CheckResult& check(const std::string& name)
    {
        for (auto& c : suite_.checks)
            if (c.name == name)
                return c;
        suite_.checks.push_back({name, 0, 0, {}});
        return suite_.checks.back();
    }

    void expect(const std::string& name, bool ok, const std::function<std::string()>& where)
    {
        auto& c = check(name);
        ++c.checked;
        if (!ok && c.failed++ == 0)
            c.counterexample = where();
    }

    // Runs f, recording an exception as a failure of `name`.
    void guard(const std::string& name, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const ParityError&) {
            throw;
        } catch (const std::exception& e) {
            const std::string what = e.what();
            expect(name, false, [&] { return what; });
        }
    }

private:
    SuiteResult& suite_;
};

Ring two_power(int n)
{
    return Ring::mod(std::int64_t{1} << n);
}

std::string at(const Space& space, const std::string& detail)
{
    return space.complex().name + ": " + detail;
}

std::vector<CohomologyClass> samples(const Space& space, Ring ring, int k, std::size_t cap)
{
    return sample_elements(space, space.cohomology(ring, k), cap);
}

CohomologyClass generator(const Space& space, const CohomologyGroup& g, std::size_t j)
{
    std::vector<std::int64_t> e(g.rank(), 0);
    e[j] = 1;
    return class_from_coords(space, g.ring, g.degree, e);
}

int middle(const Space& space)
{
    if (space.dimension() % 4 != 1)
        throw ParityError("suite needs dimension 1 mod 4, got " + std::to_string(space.dimension()));
    return (space.dimension() - 1) / 2;
}

} // namespace

bool SuiteResult::passed() const
{
    return first_failure() == nullptr;
}

std::size_t SuiteResult::checked() const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.checked;
    return n;
}

std::size_t SuiteResult::failed() const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.failed;
    return n;
}

const CheckResult* SuiteResult::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed())
            return &c;
    return nullptr;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"axioms", "cochain-identities", "pairing", "bss", "theorem73", "all"};
    return names;
}

std::string describe(const CohomologyClass& x)
{
    std::ostringstream out;
    out << "H^" << x.degree << "(" << x.ring.name() << ") [";
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        out << (i ? " " : "") << x.coords[i];
    out << "]";
    return out.str();
}

SuiteResult check_cochain_identities(const Space& space, std::uint64_t seed, const SuiteOptions& opt)
{
    SuiteResult suite;
    suite.suite = "cochain-identities";
    Recorder rec(suite);
    const auto& idx = space.index();
    const int dim = space.dimension();
    const std::string name = "coboundary formula for cup-i";
    rec.check(name);
    for (auto m : opt.moduli) {
        const Ring ring = Ring::mod(m);
        for (int i = 0; i <= opt.max_cup_index; ++i) {
            for (int t = 0; t < dim; ++t) {
                // |u| + |v| - i = t with both degrees in [0, dim].
                const int total = t + i;
                const int lo = std::max(0, total - dim), hi = std::min(dim, total);
                if (lo > hi)
                    continue;
                std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(m) << 32) ^ (static_cast<std::uint64_t>(i) << 16) ^
                                    static_cast<std::uint64_t>(t));
                for (std::size_t pair = 0; pair < opt.pairs_per_degree; ++pair) {
                    std::uniform_int_distribution<int> pick(lo, hi);
                    const int r = pick(rng), s = total - r;
                    const Cochain u = random_cochain(idx, r, ring, rng);
                    const Cochain v = random_cochain(idx, s, ring, rng);
                    Cochain lhs = coboundary(idx, cup_i(idx, u, v, i));
                    Cochain rhs = scale(cup_i(idx, coboundary(idx, u), v, i), i % 2 ? -1 : 1);
                    rhs = add(rhs, scale(cup_i(idx, u, coboundary(idx, v), i), (i + r) % 2 ? -1 : 1));
                    rhs = subtract(rhs, scale(cup_i(idx, u, v, i - 1), i % 2 ? -1 : 1));
                    rhs = subtract(rhs, scale(cup_i(idx, v, u, i - 1), (r * s) % 2 ? -1 : 1));
                    rec.expect(name, lhs == rhs, [&] {
                        return at(space, ring.name() + " i=" + std::to_string(i) + " |u|=" + std::to_string(r) +
                                             " |v|=" + std::to_string(s) + " seed=" + std::to_string(seed) +
                                             " pair=" + std::to_string(pair));
                    });
                }
            }
        }
    }
    return suite;
}

SuiteResult check_axioms(const Space& space, const SuiteOptions& opt)
{
    SuiteResult suite;
    suite.suite = "axioms";
    Recorder rec(suite);
    const int dim = space.dimension();
    const Ring z2 = Ring::mod(2);

    // Euler characteristic from face counts against Betti numbers.
    {
        std::int64_t chi_faces = 0, chi_betti = 0;
        for (int k = 0; k <= dim; ++k) {
            const auto c = static_cast<std::int64_t>(space.index().count(k));
            chi_faces += k % 2 ? -c : c;
            const auto b = space.cohomology(Ring::integers(), k).free_rank;
            chi_betti += k % 2 ? -b : b;
        }
        rec.expect("euler characteristic", chi_faces == chi_betti, [&] {
            return at(space, std::to_string(chi_faces) + " from faces, " + std::to_string(chi_betti) + " from Betti numbers");
        });
    }

    for (int k = 0; k <= dim; ++k) {
        for (const auto& x : samples(space, z2, k, opt.sample_cap)) {
            auto where = [&] { return at(space, describe(x)); };
            rec.expect("Sq^0 is the identity", same_class(sq(space, 0, x), x), where);
            rec.expect("Sq^|x| x = x cup x", same_class(sq(space, k, x), cup(space, x, x)), where);
            rec.expect("Sq^i x = 0 for i > |x|", cup_i(space.index(), x.rep, x.rep, -1).is_zero(), where);
            if (k + 1 <= dim)
                rec.expect("Sq^1 is the Bockstein of Z/2 -> Z/4 -> Z/2",
                           same_class(sq(space, 1, x), connecting(space, SesSpec::two_to_four(), x)), where);
            if (k + 2 <= dim)
                rec.expect("Sq^1 Sq^1 = 0", is_zero(sq(space, 1, sq(space, 1, x))), where);
            if (k + 3 <= dim)
                rec.expect("Sq^1 Sq^2 = Sq^3", same_class(sq(space, 1, sq(space, 2, x)), sq(space, 3, x)), where);
            if (k + 4 <= dim)
                rec.expect("Sq^2 Sq^2 = Sq^3 Sq^1",
                           same_class(sq(space, 2, sq(space, 2, x)), sq(space, 3, sq(space, 1, x))), where);
        }
    }

    // Cartan formula on generator pairs.
    for (int p = 0; p <= dim; ++p) {
        const auto& gp = space.cohomology(z2, p);
        for (int q = 0; p + q <= dim; ++q) {
            const auto& gq = space.cohomology(z2, q);
            for (std::size_t a = 0; a < gp.rank(); ++a) {
                const auto x = generator(space, gp, a);
                for (std::size_t b = 0; b < gq.rank(); ++b) {
                    const auto y = generator(space, gq, b);
                    const auto xy = cup(space, x, y);
                    for (int k = 0; p + q + k <= dim; ++k) {
                        auto sum = zero_class(space, z2, p + q + k);
                        for (int i = 0; i <= k; ++i)
                            sum = add(space, sum, cup(space, sq(space, i, x), sq(space, k - i, y)));
                        rec.expect("Cartan formula", same_class(sq(space, k, xy), sum), [&] {
                            return at(space, "k=" + std::to_string(k) + " x=" + describe(x) + " y=" + describe(y));
                        });
                    }
                }
            }
        }
    }

    // Generalized squares against ordinary squares.
    for (int n = 1; n <= opt.n_max; ++n) {
        const Ring ring = two_power(n);
        for (int k = 0; k <= dim; ++k) {
            for (const auto& x : samples(space, ring, k, opt.sample_cap)) {
                const auto red = change_coeffs(space, x, z2);
                for (int i = 0; k + i <= dim; ++i) {
                    auto where = [&] { return at(space, "i=" + std::to_string(i) + " " + describe(x)); };
                    const auto g = gen_sq(space, i, x);
                    if (n == 1)
                        rec.expect("generalized square equals Sq at n = 1", same_class(g, sq(space, i, x)), where);
                    if (i % 2 == 0)
                        rec.expect("even generalized square = [2^(n-1)] Sq red",
                                   same_class(g, change_coeffs(space, sq(space, i, red), ring)), where);
                    else
                        rec.expect("odd generalized square = beta_{2,2^n} Sq^(i-1) red",
                                   same_class(g, connecting(space, SesSpec::two_to_power(n), sq(space, i - 1, red))),
                                   where);
                }
            }
        }
    }

    // Stability under suspension.
    if (dim <= opt.suspension_max_dim) {
        const Space susp(suspension(space.complex()));
        for (int k = 0; k <= dim; ++k) {
            for (const auto& x : samples(space, z2, k, opt.sample_cap)) {
                const auto sx = class_of(susp, suspend(space.index(), susp.index(), x.rep));
                for (int i = 0; k + i <= dim; ++i) {
                    const auto lhs = class_of(susp, suspend(space.index(), susp.index(), sq(space, i, x).rep));
                    rec.expect("Sq commutes with suspension", same_class(lhs, sq(susp, i, sx)),
                               [&] { return at(space, "i=" + std::to_string(i) + " " + describe(x)); });
                }
            }
        }
    } else {
        suite.skipped.push_back("suspension stability (dimension above " + std::to_string(opt.suspension_max_dim) + ")");
    }
    return suite;
}

SuiteResult check_pairing(const Space& space, const SuiteOptions& opt)
{
    const int k = middle(space);
    const int dim = space.dimension();
    SuiteResult suite;
    suite.suite = "pairing";
    Recorder rec(suite);

    std::optional<DualityCertificate> zcert;
    rec.guard("integral duality certificate", [&] { zcert = duality_certificate(space, Ring::integers()); });
    if (zcert)
        rec.expect("integral duality certificate", true, [] { return std::string(); });

    for (int n = 1; n <= opt.n_max; ++n) {
        const Ring ring = two_power(n);
        const std::string level = "n=" + std::to_string(n);
        rec.guard("duality certificate over Z/2^n", [&] {
            duality_certificate(space, ring);
            rec.expect("duality certificate over Z/2^n", true, [] { return std::string(); });
        });

        std::optional<PairingMatrix> aux;
        rec.guard("auxiliary pairing is skew-symmetric", [&] { aux = aux_pairing(space, n); });
        if (aux)
            rec.expect("auxiliary pairing is skew-symmetric", aux->skew, [&] { return at(space, level); });

        for (const auto& x : samples(space, ring, dim - 1, opt.sample_cap))
            rec.expect("Bockstein into the top degree vanishes",
                       is_zero(connecting(space, SesSpec::doubling(n), x)),
                       [&] { return at(space, level + " " + describe(x)); });

        for (const auto& x : samples(space, ring, k, opt.sample_cap)) {
            const auto bx = connecting(space, SesSpec::doubling(n), x);
            rec.expect("x cup beta(x) = gen_sq(beta(x))", same_class(cup(space, x, bx), gen_sq(space, k, bx)),
                       [&] { return at(space, level + " " + describe(x)); });
        }

        if (aux && zcert) {
            // Linking numbers of integral Bocksteins against the auxiliary
            // pairing divided by 2^n.
            std::vector<CohomologyClass> lifted;
            for (const auto& x : aux->basis)
                lifted.push_back(connecting(space, SesSpec::integral(n), x));
            for (std::size_t i = 0; i < aux->size(); ++i)
                for (std::size_t j = 0; j < aux->size(); ++j)
                    rec.guard("linking form = auxiliary pairing / 2^n", [&] {
                        const auto lk = linking_number(space, *zcert, lifted[i], lifted[j]);
                        rec.expect("linking form = auxiliary pairing / 2^n",
                                   lk == DyadicFraction::make(aux->gram[i][j], n), [&] {
                                       return at(space, level + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                            "): " + lk.str() + " vs " + std::to_string(aux->gram[i][j]) +
                                                            "/2^n");
                                   });
                    });
        }

        rec.guard("transported linking form is well defined", [&] {
            const auto lk = linking_form(space, n);
            rec.expect("transported linking form is well defined", true, [] { return std::string(); });
            if (aux && aux->alternating)
                rec.expect("alternating auxiliary pairing gives an alternating linking form", lk.alternating,
                           [&] { return at(space, level); });
            rec.expect("transported linking form is skew-symmetric", lk.skew, [&] { return at(space, level); });
        });
    }

    rec.guard("linking form is nondegenerate", [&] {
        const auto lk = classical_linking_form(space);
        rec.expect("linking form is nondegenerate", linking_nondegenerate(lk), [&] { return at(space, "classical"); });
    });
    return suite;
}

SuiteResult check_bss(const Space& space, const SuiteOptions& opt)
{
    SuiteResult suite;
    suite.suite = "bss";
    Recorder rec(suite);
    const int dim = space.dimension();
    for (int n = 1; n <= opt.bss_n_max; ++n) {
        for (int r = 1; r <= opt.bss_pages; ++r) {
            const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);
            rec.guard("page consistency", [&] {
                const auto failures = check_bss_page(space, n, r);
                rec.expect("page consistency", failures.empty(), [&] { return at(space, failures.front()); });
            });
            rec.guard("lift order of a nonzero differential", [&] {
                const auto page = bss_page(space, n, r);
                const std::int64_t low = std::int64_t{1} << (n * (r - 1)), high = std::int64_t{1} << (n * r);
                for (const auto& piece : page.pieces)
                    for (auto order : piece.lift_orders)
                        rec.expect("lift order of a nonzero differential", order > low && order <= high, [&] {
                            return at(space, where + " degree " + std::to_string(piece.degree) + " order " +
                                                 std::to_string(order));
                        });
            });
        }
        // Secondary Bockstein of 2^{n-1} x^2 for even-degree x.
        const Ring ring = two_power(n);
        for (int k = 0; 4 * k + 1 <= dim; ++k) {
            for (const auto& x : samples(space, ring, 2 * k, opt.sample_cap)) {
                rec.guard("beta_2(2^(n-1) x^2) = x beta(x) - gen_sq(beta(x))", [&] {
                    const auto sq2 = scale(space, cup(space, x, x), std::int64_t{1} << (n - 1));
                    const auto lhs = beta2(space, sq2);
                    const auto bx = connecting(space, SesSpec::doubling(n), x);
                    const auto rhs = add(space, cup(space, x, bx), scale(space, gen_sq(space, 2 * k, bx), -1));
                    rec.expect("beta_2(2^(n-1) x^2) = x beta(x) - gen_sq(beta(x))", lhs == coset_of(space, rhs),
                               [&] { return at(space, "n=" + std::to_string(n) + " " + describe(x)); });
                });
            }
        }
    }
    return suite;
}

SuiteResult check_theorem73(const Space& space, const SuiteOptions& opt)
{
    middle(space);
    SuiteResult suite;
    suite.suite = "theorem73";
    Recorder rec(suite);
    const int dim = space.dimension();
    const Ring z2 = Ring::mod(2);

    rec.guard("Wu classes", [&] {
        const auto wu = wu_classes(space);
        rec.expect("v_0 = 1", same_class(wu.v[0], class_from_coords(space, z2, 0, {1})), [&] { return at(space, "v_0"); });
        for (int i = 0; i <= dim; ++i)
            if (2 * i > dim)
                rec.expect("v_i = 0 above half the dimension", is_zero(wu.v[i]),
                           [&] { return at(space, "v_" + std::to_string(i)); });
        const auto w = sw_from_wu(space, wu);
        if (dim >= 1)
            rec.expect("v_1 = w_1", same_class(wu.v[1], w[1]), [&] { return at(space, "degree 1"); });
        if (dim >= 2)
            rec.expect("v_2 = w_2 + w_1^2", same_class(wu.v[2], add(space, w[2], cup(space, w[1], w[1]))),
                       [&] { return at(space, "degree 2"); });
        const auto obs = wu_lift_obstruction(space, wu, opt.n_max);
        if (obs.lifts)
            for (std::size_t n = 0; n < obs.beta_2n.size(); ++n)
                rec.expect("lifting kills every finite obstruction", is_zero(obs.beta_2n[n]),
                           [&] { return at(space, "n=" + std::to_string(n + 1)); });
    });

    rec.guard("verdict is consistent", [&] {
        const auto record = theorem73_verdict(space, opt.n_max, opt.sample_cap);
        rec.expect("verdict is consistent", record.consistent, [&] {
            return at(space, std::string("alternating=") + (record.all_alternating ? "true" : "false") +
                                 " lifts=" + (record.lifts ? "true" : "false"));
        });
        for (const auto& level : record.levels)
            for (const auto& [name, ok] : level.identities)
                rec.expect("identity chain: " + name, ok, [&] { return at(space, "n=" + std::to_string(level.n)); });
        rec.expect("no internal disagreement", record.failures.empty(),
                   [&] { return at(space, record.failures.front()); });
    });
    return suite;
}

std::vector<SuiteResult> run_suite(const Space& space, const std::string& name, std::uint64_t seed,
                                   const SuiteOptions& opt)
{
    const bool all = name == "all";
    const bool known = std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
    if (!known)
        throw ValidationError("unknown suite '" + name + "'");
    const bool paired = space.dimension() % 4 == 1;
    std::vector<SuiteResult> out;
    auto skip = [&](const std::string& suite) {
        SuiteResult s;
        s.suite = suite;
        s.skipped.push_back("needs dimension 1 mod 4");
        out.push_back(std::move(s));
    };
    if (all || name == "axioms")
        out.push_back(check_axioms(space, opt));
    if (all || name == "cochain-identities")
        out.push_back(check_cochain_identities(space, seed, opt));
    if (all || name == "pairing") {
        if (all && !paired)
            skip("pairing");
        else
            out.push_back(check_pairing(space, opt));
    }
    if (all || name == "bss")
        out.push_back(check_bss(space, opt));
    if (all || name == "theorem73") {
        if (all && !paired)
            skip("theorem73");
        else
            out.push_back(check_theorem73(space, opt));
    }
    return out;
}

} // namespace linkform
