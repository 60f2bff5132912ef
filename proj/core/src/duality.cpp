#include "linkform/duality.hpp"

#include <algorithm>
#include <numeric>

#include "linkform/cup.hpp"
#include "linkform/errors.hpp"
#include "linkform/int_matrix.hpp"
#include "linkform/lattice.hpp"
#include "linkform/snf.hpp"
#include "linkform/steenrod.hpp"

namespace linkform {

namespace {

using linalg::DenseMatrix;
using linalg::IntVector;
using linalg::Lattice;

std::vector<std::int64_t> unit(std::size_t size, std::size_t j)
{
    std::vector<std::int64_t> e(size, 0);
    e[j] = 1;
    return e;
}

CohomologyClass generator_class(const Space& space, const CohomologyGroup& g, std::size_t j)
{
    return class_from_coords(space, g.ring, g.degree, unit(g.rank(), j));
}

std::int64_t integrate_coords(const DualityCertificate& cert, const std::vector<std::int64_t>& coords)
{
    const std::int64_t f = cert.fundamental.coords.at(0);
    if (cert.ring.is_integers())
        return coords.at(0) * f; // f = +-1
    const std::int64_t m = cert.ring.modulus;
    return mod_floor(coords.at(0) * inverse_mod(mod_floor(f, m), m), m);
}

std::int64_t integrate_cochain(const Space& space, const DualityCertificate& cert, const Cochain& top)
{
    const auto& g = space.cohomology(cert.ring, cert.dimension);
    return integrate_coords(cert, g.express(space, top));
}

bool injective_pairing(const std::vector<std::vector<std::int64_t>>& m, const CohomologyGroup& a, std::int64_t modulus)
{
    const std::size_t rows = a.rank();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    DenseMatrix t(cols, IntVector(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            t[j][i] = m[i][j];
    IntVector diag(cols, Integer(modulus));
    const auto ker = linalg::preimage(t, rows, Lattice::diagonal(diag));
    return a.relations().contains(ker);
}

std::string degree_text(int k)
{
    return "degree " + std::to_string(k);
}

int two_adic_valuation(std::int64_t t)
{
    return t == 0 ? 0 : __builtin_ctzll(static_cast<unsigned long long>(t));
}

std::int64_t element_order(const CohomologyGroup& g, const std::vector<std::int64_t>& c)
{
    std::int64_t order = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t t = g.order(j);
        if (t == 0) {
            if (c[j] != 0)
                throw ValidationError("class has infinite order");
            continue;
        }
        const std::int64_t cj = mod_floor(c[j], t);
        order = std::lcm(order, t / std::gcd(cj, t));
    }
    return order;
}

void set_flags(PairingMatrix& p)
{
    const std::size_t s = p.size();
    p.skew = p.symmetric = true;
    bool zero_diag = true;
    if (!p.fractions.empty()) {
        for (std::size_t i = 0; i < s; ++i) {
            zero_diag = zero_diag && p.fractions[i][i].is_zero();
            for (std::size_t j = 0; j < s; ++j) {
                p.skew = p.skew && (p.fractions[i][j] + p.fractions[j][i]).is_zero();
                p.symmetric = p.symmetric && p.fractions[i][j] == p.fractions[j][i];
            }
        }
    } else {
        const std::int64_t m = std::int64_t{1} << p.n;
        for (std::size_t i = 0; i < s; ++i) {
            zero_diag = zero_diag && mod_floor(p.gram[i][i], m) == 0;
            for (std::size_t j = 0; j < s; ++j) {
                p.skew = p.skew && mod_floor(p.gram[i][j] + p.gram[j][i], m) == 0;
                p.symmetric = p.symmetric && mod_floor(p.gram[i][j] - p.gram[j][i], m) == 0;
            }
        }
    }
    // For a skew form <x, x> = sum c_i^2 <e_i, e_i>, so the diagonal decides.
    p.alternating = p.skew && zero_diag;
}

int middle_degree(const Space& space)
{
    const int dim = space.dimension();
    if (dim % 4 != 1)
        throw ParityError("pairing needs dimension 1 mod 4, got " + std::to_string(dim));
    return (dim - 1) / 2;
}

// Coordinates of the generators of the 2^n-torsion (n < 0: all 2-primary
// torsion) of an integral group, with their orders.
std::pair<std::vector<std::vector<std::int64_t>>, std::vector<std::int64_t>> two_torsion_basis(const CohomologyGroup& g,
                                                                                               int n)
{
    std::vector<std::vector<std::int64_t>> basis;
    std::vector<std::int64_t> orders;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t t = g.order(j);
        if (t == 0)
            continue;
        const int a = two_adic_valuation(t);
        if (a == 0)
            continue;
        const int keep = n < 0 ? a : std::min(a, n);
        auto e = std::vector<std::int64_t>(g.rank(), 0);
        e[j] = (t >> a) << (a - keep);
        basis.push_back(std::move(e));
        orders.push_back(std::int64_t{1} << keep);
    }
    return {basis, orders};
}

} // namespace

DualityCheck check_duality(const Space& space, Ring ring)
{
    DualityCheck out;
    const int dim = space.dimension();
    const auto& top = space.cohomology(ring, dim);
    auto fail = [&](int k, std::string why) {
        out.failing_degree = k;
        out.reason = std::move(why);
        return out;
    };

    const auto& top_z = space.cohomology(Ring::integers(), dim);
    const bool orientable = top_z.free_rank == 1 && top_z.torsion.empty();
    CohomologyClass fundamental;
    if (ring.is_integers()) {
        if (!orientable)
            return fail(dim, "top integral cohomology is not Z");
        // Dual of the first top simplex; in a connected orientable
        // pseudomanifold it generates.
        auto e = make_cochain(space.index(), dim, ring, unit(space.index().count(dim), 0));
        fundamental = class_of(space, e);
        if (std::abs(fundamental.coords[0]) != 1)
            fundamental = class_from_coords(space, ring, dim, {fundamental.coords[0] > 0 ? 1 : -1});
    } else {
        if (top.rank() != 1 || top.order(0) != ring.modulus)
            return fail(dim, "top cohomology is not cyclic of order " + std::to_string(ring.modulus));
        if (orientable) {
            auto e = make_cochain(space.index(), dim, Ring::integers(), unit(space.index().count(dim), 0));
            fundamental = change_coeffs(space, class_of(space, e), ring);
            if (std::gcd(fundamental.coords[0], ring.modulus) != 1)
                fundamental = class_from_coords(space, ring, dim, {1});
        } else {
            fundamental = class_from_coords(space, ring, dim, {1});
        }
    }

    DualityCertificate cert;
    cert.dimension = dim;
    cert.ring = ring;
    cert.fundamental = fundamental;
    for (int k = 0; k <= dim; ++k) {
        const auto& a = space.cohomology(ring, k);
        const auto& b = space.cohomology(ring, dim - k);
        CupPairing p;
        p.degree = k;
        const std::size_t ra = ring.is_integers() ? static_cast<std::size_t>(a.free_rank) : a.rank();
        const std::size_t rb = ring.is_integers() ? static_cast<std::size_t>(b.free_rank) : b.rank();
        p.matrix.assign(ra, std::vector<std::int64_t>(rb, 0));
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < rb; ++j)
                p.matrix[i][j] = integrate_cochain(space, cert, cup(space.index(), a.generators[i], b.generators[j]));
        if (ring.is_integers()) {
            bool unimodular = ra == rb;
            if (unimodular && ra > 0) {
                std::vector<std::vector<Integer>> dense;
                for (const auto& row : p.matrix)
                    dense.emplace_back(row.begin(), row.end());
                auto inv = linalg::invariant_factors(linalg::IntMatrix::from_dense(dense, rb));
                unimodular = inv.size() == ra && std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
            }
            const auto& dual_torsion = space.cohomology(ring, dim - k + 1).torsion;
            p.perfect = unimodular && a.torsion == dual_torsion;
        } else {
            p.perfect = a.size() == b.size() && injective_pairing(p.matrix, a, ring.modulus);
        }
        const bool ok = p.perfect;
        cert.pairings.push_back(std::move(p));
        if (!ok)
            return fail(k, "cup pairing in " + degree_text(k) + " is not perfect over " + ring.name());
    }
    out.certificate = std::move(cert);
    return out;
}

DualityCertificate duality_certificate(const Space& space, Ring ring)
{
    auto check = check_duality(space, ring);
    if (!check.certificate)
        throw NotPoincareDuality(check.failing_degree, check.reason);
    return std::move(*check.certificate);
}

std::int64_t integrate(const Space& space, const DualityCertificate& cert, const CohomologyClass& x)
{
    if (x.degree != cert.dimension)
        throw DimensionMismatch("integration needs a class of degree " + std::to_string(cert.dimension));
    if (!(x.ring == cert.ring))
        throw RingMismatch("class ring " + x.ring.name() + " differs from certificate ring " + cert.ring.name());
    (void)space;
    return integrate_coords(cert, x.coords);
}

DyadicFraction DyadicFraction::make(const Integer& num, int exp)
{
    Integer k = mod_floor(num, Integer(1) << exp);
    while (exp > 0 && k % 2 == 0) {
        k /= 2;
        --exp;
    }
    if (k == 0)
        exp = 0;
    return {to_int64(k), exp};
}

DyadicFraction DyadicFraction::operator+(const DyadicFraction& o) const
{
    const int e = std::max(exp, o.exp);
    return make(Integer(num) * (Integer(1) << (e - exp)) + Integer(o.num) * (Integer(1) << (e - o.exp)), e);
}

DyadicFraction DyadicFraction::operator-() const
{
    return make(-Integer(num), exp);
}

std::string DyadicFraction::str() const
{
    if (exp == 0)
        return "0";
    return std::to_string(num) + "/" + std::to_string(std::int64_t{1} << exp);
}

PairingMatrix aux_pairing(const Space& space, int n)
{
    const int k = middle_degree(space);
    const Ring ring = Ring::mod(std::int64_t{1} << n);
    const auto cert = duality_certificate(space, ring);
    const auto& g = space.cohomology(ring, k);
    PairingMatrix p;
    p.n = n;
    p.degree = k;
    std::vector<CohomologyClass> betas;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        p.basis.push_back(generator_class(space, g, j));
        p.basis_orders.push_back(g.order(j));
        betas.push_back(connecting(space, SesSpec::doubling(n), p.basis.back()));
    }
    p.gram.assign(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            p.gram[i][j] = integrate_cochain(space, cert, cup(space.index(), p.basis[i].rep, betas[j].rep));
    set_flags(p);
    return p;
}

PairingMatrix linking_form(const Space& space, int n)
{
    const int k = middle_degree(space);
    const Ring ring = Ring::mod(std::int64_t{1} << n);
    const auto aux = aux_pairing(space, n);
    const auto& src = space.cohomology(ring, k);
    const auto& tgt = space.cohomology(Ring::integers(), k + 1);
    const auto& low = space.cohomology(Ring::integers(), k);

    DenseMatrix bt(tgt.rank(), IntVector(src.rank()));
    for (std::size_t j = 0; j < src.rank(); ++j) {
        auto b = connecting(space, SesSpec::integral(n), aux.basis[j]);
        for (std::size_t r = 0; r < tgt.rank(); ++r)
            bt[r][j] = b.coords[r];
    }
    // Kernel of the integral Bockstein: reductions of integral classes.
    IntVector shift(src.rank());
    for (std::size_t j = 0; j < low.rank(); ++j) {
        auto r = change_coeffs(space, generator_class(space, low, j), ring);
        for (std::size_t t = 0; t < src.rank(); ++t)
            shift[t] += Integer(r.coords[t]) * static_cast<std::int64_t>(j + 1);
    }

    auto [basis, orders] = two_torsion_basis(tgt, n);
    std::vector<IntVector> pre;
    for (const auto& y : basis) {
        auto x = linalg::solve_affine(bt, src.rank(), tgt.relations(), IntVector(y.begin(), y.end()));
        if (!x)
            throw std::logic_error("2^n-torsion class has no preimage under the integral Bockstein");
        pre.push_back(std::move(*x));
    }
    const Integer m = Integer(1) << n;
    auto pair = [&](const IntVector& x, const IntVector& y) {
        Integer s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                s += x[i] * aux.gram[i][j] * y[j];
        return mod_floor(s, m);
    };

    PairingMatrix p;
    p.n = n;
    p.degree = k + 1;
    p.basis_orders = orders;
    for (const auto& y : basis)
        p.basis.push_back(class_from_coords(space, Ring::integers(), k + 1, y));
    p.fractions.assign(basis.size(), std::vector<DyadicFraction>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            p.fractions[i][j] = DyadicFraction::make(pair(pre[i], pre[j]), n);
            IntVector xi = pre[i];
            for (std::size_t t = 0; t < xi.size(); ++t)
                xi[t] += shift[t];
            if (!(DyadicFraction::make(pair(xi, pre[j]), n) == p.fractions[i][j]))
                throw std::logic_error("linking form depends on the choice of preimage");
        }
    }
    set_flags(p);
    return p;
}

DyadicFraction linking_number(const Space& space, const DualityCertificate& integral_cert, const CohomologyClass& a,
                              const CohomologyClass& b)
{
    const int dim = space.dimension();
    if (dim % 2 != 1)
        throw ParityError("linking numbers need odd dimension");
    if (a.degree + b.degree != dim + 1)
        throw DimensionMismatch("linking number needs degrees summing to dim + 1");
    const auto& g = space.cohomology(Ring::integers(), a.degree);
    const std::int64_t t = element_order(g, a.coords);
    if ((t & (t - 1)) != 0)
        throw ValidationError("linking numbers are computed on 2-primary torsion only");
    if (t == 1)
        return {};
    auto c = solve_coboundary(space, scale(a.rep, t));
    if (!c)
        throw std::logic_error("multiple of a torsion class is not a coboundary");
    const auto value = integrate_cochain(space, integral_cert, cup(space.index(), *c, b.rep));
    return DyadicFraction::make(value, two_adic_valuation(t));
}

PairingMatrix classical_linking_form(const Space& space)
{
    const int dim = space.dimension();
    if (dim % 2 != 1)
        throw ParityError("linking form needs odd dimension, got " + std::to_string(dim));
    const int k = (dim + 1) / 2;
    const auto cert = duality_certificate(space, Ring::integers());
    const auto& g = space.cohomology(Ring::integers(), k);
    auto [basis, orders] = two_torsion_basis(g, -1);
    PairingMatrix p;
    p.degree = k;
    p.n = 0;
    for (auto o : orders)
        p.n = std::max(p.n, two_adic_valuation(o));
    p.basis_orders = orders;
    for (const auto& y : basis)
        p.basis.push_back(class_from_coords(space, Ring::integers(), k, y));
    p.fractions.assign(basis.size(), std::vector<DyadicFraction>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            p.fractions[i][j] = linking_number(space, cert, p.basis[i], p.basis[j]);
    set_flags(p);
    return p;
}

bool linking_nondegenerate(const PairingMatrix& lk)
{
    const std::size_t s = lk.size();
    if (s == 0)
        return true;
    int top = 0;
    for (const auto& row : lk.fractions)
        for (const auto& f : row)
            top = std::max(top, f.exp);
    for (auto o : lk.basis_orders)
        top = std::max(top, two_adic_valuation(o));
    DenseMatrix t(s, IntVector(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            t[j][i] = Integer(lk.fractions[i][j].num) << (top - lk.fractions[i][j].exp);
    const auto ker = linalg::preimage(t, s, Lattice::diagonal(IntVector(s, Integer(1) << top)));
    IntVector orders;
    for (auto o : lk.basis_orders)
        orders.emplace_back(o);
    return Lattice::diagonal(orders).contains(ker);
}

WuClasses wu_classes(const Space& space)
{
    const Ring z2 = Ring::mod(2);
    const auto cert = duality_certificate(space, z2);
    const int dim = space.dimension();
    WuClasses wu;
    for (int i = 0; i <= dim; ++i) {
        const auto& a = space.cohomology(z2, i);
        const auto& b = space.cohomology(z2, dim - i);
        const auto& pm = cert.pairings[i].matrix;
        linalg::IntMatrix m(b.rank(), a.rank());
        for (std::size_t r = 0; r < a.rank(); ++r)
            for (std::size_t c = 0; c < b.rank(); ++c)
                if (pm[r][c] != 0)
                    m.set(c, r, pm[r][c]);
        std::vector<Integer> rhs(b.rank());
        for (std::size_t c = 0; c < b.rank(); ++c)
            rhs[c] = integrate(space, cert, sq(space, i, generator_class(space, b, c)));
        auto sol = linalg::solve_mod(m, rhs, 2);
        std::vector<std::int64_t> coords;
        for (const auto& v : sol)
            coords.push_back(to_int64(mod_floor(v, Integer(2))));
        wu.v.push_back(class_from_coords(space, z2, i, coords));
    }
    return wu;
}

std::vector<CohomologyClass> sw_from_wu(const Space& space, const WuClasses& wu)
{
    const int dim = space.dimension();
    std::vector<CohomologyClass> w;
    for (int k = 0; k <= dim; ++k) {
        auto total = zero_class(space, Ring::mod(2), k);
        for (int i = 0; i <= k; ++i)
            total = add(space, total, sq(space, k - i, wu.v[i]));
        w.push_back(std::move(total));
    }
    return w;
}

WuLiftObstruction wu_lift_obstruction(const Space& space, const WuClasses& wu, int n_max)
{
    const int dim = space.dimension();
    if (dim % 2 != 1)
        throw ParityError("lifting obstruction needs odd dimension, got " + std::to_string(dim));
    WuLiftObstruction out;
    out.degree = (dim - 1) / 2;
    out.v = wu.v[out.degree];
    out.beta_tilde = connecting(space, SesSpec::integral(1), out.v);
    out.lifts = is_zero(out.beta_tilde);
    for (int n = 1; n <= n_max; ++n)
        out.beta_2n.push_back(connecting(space, SesSpec::two_to_power(n), out.v));
    return out;
}

Theorem73Record theorem73_verdict(const Space& space, int n_max, std::size_t sample_cap)
{
    const int k = middle_degree(space);
    Theorem73Record rec;
    rec.dimension = space.dimension();
    rec.n_max = n_max;
    const auto wu = wu_classes(space);
    const auto obs = wu_lift_obstruction(space, wu, n_max);
    rec.lifts = obs.lifts;
    const Ring z2 = Ring::mod(2);
    const auto& v = wu.v[k];

    rec.all_alternating = true;
    for (int n = 1; n <= n_max; ++n) {
        const Ring ring = Ring::mod(std::int64_t{1} << n);
        const auto aux = aux_pairing(space, n);
        VerdictLevel level;
        level.n = n;
        level.alternating = aux.alternating;
        level.skew = aux.skew;
        level.obstruction_vanishes = is_zero(obs.beta_2n[n - 1]);
        rec.all_alternating = rec.all_alternating && aux.alternating;

        const auto a = change_coeffs(space, v, ring);
        const auto beta_a = connecting(space, SesSpec::doubling(n), a);
        std::vector<bool> ok(7, true);
        const auto samples = sample_elements(space, space.cohomology(ring, k), sample_cap);
        level.samples = samples.size();
        for (const auto& x : samples) {
            const auto bx = connecting(space, SesSpec::doubling(n), x);
            const auto gsq = gen_sq(space, k, bx);
            const auto lhs = cup(space, x, bx);
            ok[0] = ok[0] && same_class(lhs, gsq);
            const auto ybar = change_coeffs(space, bx, z2);
            const auto s = sq(space, k, ybar);
            ok[1] = ok[1] && same_class(gsq, change_coeffs(space, s, ring));
            const auto vy = cup(space, v, ybar);
            ok[2] = ok[2] && same_class(s, vy);
            const auto a_bx = cup(space, a, bx);
            ok[3] = ok[3] && same_class(change_coeffs(space, vy, ring), a_bx);
            const auto b_ax = connecting(space, SesSpec::doubling(n), cup(space, a, x));
            ok[4] = ok[4] && same_class(a_bx, add(space, b_ax, scale(space, cup(space, beta_a, x), -1)));
            ok[5] = ok[5] && is_zero(b_ax);
        }
        ok[6] = same_class(beta_a, obs.beta_2n[n - 1]);
        const char* names[] = {
            "x cup beta(x) = gen_sq(beta(x))",
            "gen_sq(beta(x)) = [2^(n-1)] Sq(red beta(x))",
            "Sq(red beta(x)) = v cup red beta(x)",
            "[2^(n-1)](v cup red beta(x)) = [2^(n-1)]v cup beta(x)",
            "a cup beta(x) = beta(a cup x) - beta(a) cup x",
            "beta vanishes into the top degree",
            "beta([2^(n-1)] v) = beta_{2,2^n}(v)",
        };
        for (int i = 0; i < 7; ++i) {
            level.identities.emplace_back(names[i], ok[i]);
            if (!ok[i])
                rec.failures.push_back("n=" + std::to_string(n) + ": " + names[i]);
        }
        if (level.alternating != level.obstruction_vanishes)
            rec.failures.push_back("n=" + std::to_string(n) + ": alternation differs from vanishing of beta_{2,2^n}(v)");
        rec.levels.push_back(std::move(level));
    }

    const auto lk = classical_linking_form(space);
    rec.linking_alternating = lk.alternating;
    rec.n_max_covers_torsion = lk.n <= n_max;
    rec.consistent = rec.all_alternating == rec.lifts;
    if (rec.n_max_covers_torsion && rec.linking_alternating != rec.lifts)
        rec.failures.push_back("cochain-level linking form alternation differs from the lifting criterion");
    return rec;
}

} // namespace linkform
