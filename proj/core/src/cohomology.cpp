#include "linkform/cohomology.hpp"

#include <algorithm>

#include "linkform/errors.hpp"
#include "linkform/snf.hpp"

namespace linkform {

namespace {

std::vector<Integer> to_integers(const std::vector<std::int64_t>& v)
{
    return std::vector<Integer>(v.begin(), v.end());
}

std::vector<Integer> dense_apply(const std::vector<std::vector<Integer>>& m, const std::vector<Integer>& x)
{
    std::vector<Integer> y(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c)
            if (m[r][c] != 0 && x[c] != 0)
                y[r] += m[r][c] * x[c];
    return y;
}

void check_class_ring(const CohomologyGroup& g, const Cochain& z)
{
    if (!(z.ring == g.ring))
        throw RingMismatch("cochain ring " + z.ring.name() + " does not match group ring " + g.ring.name());
    if (z.degree != g.degree)
        throw DimensionMismatch("cochain degree does not match the group");
}

} // namespace

std::int64_t CohomologyGroup::order(std::size_t j) const
{
    if (j < static_cast<std::size_t>(free_rank))
        return 0;
    return torsion.at(j - free_rank);
}

linalg::Lattice CohomologyGroup::relations() const
{
    std::vector<Integer> d;
    for (std::size_t j = 0; j < rank(); ++j)
        d.push_back(order(j));
    return linalg::Lattice::diagonal(d);
}

std::int64_t CohomologyGroup::size() const
{
    if (free_rank > 0)
        return 0;
    std::int64_t s = 1;
    for (auto t : torsion)
        s = checked_mul(s, t);
    return s;
}

std::vector<std::int64_t> CohomologyGroup::express(const Space& space, const Cochain& z) const
{
    check_class_ring(*this, z);
    if (z.values.size() != space.index().count(degree))
        throw DimensionMismatch("cochain does not belong to this complex");
    if (degree > space.dimension())
        return {};
    if (!is_cocycle(space.index(), z))
        throw NotACocycle("cochain of degree " + std::to_string(degree) + " is not a cocycle over " + ring.name());
    const auto x = space.reduction().project(degree, z.values, ring);
    const auto y = dense_apply(kernel_change, to_integers(x));
    std::vector<Integer> t(kept.size());
    for (std::size_t l = 0; l < kept.size(); ++l) {
        const Integer& yi = y[kept[l]];
        if (mod_floor(yi, kernel_scale[l]) != 0)
            throw NotACocycle("reduced cochain is not a cocycle");
        t[l] = yi / kernel_scale[l];
    }
    const auto c = dense_apply(summand_change, t);
    std::vector<std::int64_t> coords(rank());
    for (std::size_t j = 0; j < rank(); ++j)
        coords[j] = to_int64(mod_floor(c[j], Integer(order(j))));
    return coords;
}

Space::Space(SimplicialComplex k) : complex_(std::move(k))
{
    index_ = std::make_unique<SimplexIndex>(complex_);
    reduction_ = std::make_unique<ChainReduction>(*index_);
}

const CohomologyGroup& Space::cohomology(Ring ring, int k) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(ring.modulus, k);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, std::make_unique<CohomologyGroup>(compute_cohomology(*this, ring, k))).first;
    return *it->second;
}

CohomologyGroup compute_cohomology(const Space& space, Ring ring, int k)
{
    const int dim = space.dimension();
    if (k < 0)
        throw ValidationError("cohomology degree " + std::to_string(k) + " out of range");
    CohomologyGroup g;
    g.degree = k;
    g.ring = ring;
    if (k > dim)
        return g;
    const auto& red = space.reduction();
    const std::size_t ck = red.critical_count(k);
    const Integer m = ring.modulus;

    const auto snf = linalg::smith_normal_form(red.reduced_delta(k));
    g.kernel_change = snf.V.to_dense();
    for (std::size_t i = 0; i < ck; ++i) {
        if (i < snf.rank()) {
            if (m == 0)
                continue;
            g.kept.push_back(i);
            g.kernel_scale.push_back(m / gcd(snf.diagonal[i], m));
        } else {
            g.kept.push_back(i);
            g.kernel_scale.push_back(1);
        }
    }
    const std::size_t gk = g.kept.size();
    auto to_kernel_coords = [&](const std::vector<Integer>& x) {
        auto y = dense_apply(g.kernel_change, x);
        std::vector<Integer> t(gk);
        for (std::size_t l = 0; l < gk; ++l) {
            if (y[g.kept[l]] % g.kernel_scale[l] != 0)
                throw std::logic_error("relation outside the cocycle lattice");
            t[l] = y[g.kept[l]] / g.kernel_scale[l];
        }
        return t;
    };
    // Relations: the image of delta'_{k-1}, and m times everything.
    std::vector<std::vector<Integer>> rel_cols;
    const auto prev = red.reduced_delta(k - 1).transpose();
    for (std::size_t j = 0; j < prev.rows(); ++j) {
        std::vector<Integer> x(ck);
        for (const auto& e : prev.row(j))
            x[e.col] = e.value;
        rel_cols.push_back(to_kernel_coords(x));
    }
    if (m != 0) {
        for (std::size_t j = 0; j < ck; ++j) {
            std::vector<Integer> x(ck);
            x[j] = m;
            rel_cols.push_back(to_kernel_coords(x));
        }
    }
    linalg::IntMatrix rel(gk, rel_cols.size());
    for (std::size_t c = 0; c < rel_cols.size(); ++c)
        for (std::size_t r = 0; r < gk; ++r)
            if (rel_cols[c][r] != 0)
                rel.set(r, c, rel_cols[c][r]);
    const auto snf2 = linalg::smith_normal_form(rel);

    std::vector<std::size_t> summands;
    for (std::size_t i = snf2.rank(); i < gk; ++i)
        summands.push_back(i);
    g.free_rank = static_cast<int>(summands.size());
    for (std::size_t i = 0; i < snf2.rank(); ++i) {
        if (snf2.diagonal[i] != 1) {
            summands.push_back(i);
            g.torsion.push_back(to_int64(snf2.diagonal[i]));
        }
    }
    const auto u2 = snf2.U.to_dense();
    const auto u2_inv = snf2.U_inv.to_dense();
    const auto v_inv = snf.V_inv.to_dense();
    for (std::size_t i : summands) {
        g.summand_change.push_back(u2_inv[i]);
        std::vector<Integer> y(ck);
        for (std::size_t l = 0; l < gk; ++l)
            y[g.kept[l]] = g.kernel_scale[l] * u2[l][i];
        auto x = dense_apply(v_inv, y);
        std::vector<std::int64_t> xs(ck);
        for (std::size_t c = 0; c < ck; ++c)
            xs[c] = to_int64(mod_floor(x[c], m));
        Cochain gen{k, ring, red.include(k, xs, ring)};
        g.generators.push_back(std::move(gen));
    }
    return g;
}

CohomologyClass class_from_coords(const Space& space, Ring ring, int k, std::vector<std::int64_t> coords)
{
    const auto& g = space.cohomology(ring, k);
    if (coords.size() != g.rank())
        throw DimensionMismatch("coordinate vector has the wrong length");
    Cochain rep = zero_cochain(space.index(), k, ring);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        coords[j] = mod_floor(coords[j], g.order(j));
        if (coords[j] != 0)
            rep = add(rep, scale(g.generators[j], coords[j]));
    }
    return CohomologyClass{k, ring, std::move(coords), std::move(rep)};
}

CohomologyClass class_of(const Space& space, const Cochain& z)
{
    const auto& g = space.cohomology(z.ring, z.degree);
    return CohomologyClass{z.degree, z.ring, g.express(space, z), z};
}

CohomologyClass zero_class(const Space& space, Ring ring, int k)
{
    return class_from_coords(space, ring, k, std::vector<std::int64_t>(space.cohomology(ring, k).rank(), 0));
}

CohomologyClass add(const Space& space, const CohomologyClass& a, const CohomologyClass& b)
{
    if (!(a.ring == b.ring) || a.degree != b.degree)
        throw RingMismatch("classes live in different groups");
    const auto& g = space.cohomology(a.ring, a.degree);
    std::vector<std::int64_t> c(a.coords.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = mod_floor(checked_add(a.coords[j], b.coords[j]), g.order(j));
    return CohomologyClass{a.degree, a.ring, std::move(c), add(a.rep, b.rep)};
}

CohomologyClass scale(const Space& space, const CohomologyClass& a, std::int64_t s)
{
    const auto& g = space.cohomology(a.ring, a.degree);
    std::vector<std::int64_t> c(a.coords.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = mod_floor(checked_mul(a.coords[j], s), g.order(j));
    return CohomologyClass{a.degree, a.ring, std::move(c), scale(a.rep, s)};
}

bool is_zero(const CohomologyClass& x)
{
    return std::all_of(x.coords.begin(), x.coords.end(), [](std::int64_t v) { return v == 0; });
}

bool same_class(const CohomologyClass& a, const CohomologyClass& b)
{
    return a.ring == b.ring && a.degree == b.degree && a.coords == b.coords;
}

std::optional<Cochain> solve_coboundary(const Space& space, const Cochain& z)
{
    const int k = z.degree;
    const auto& idx = space.index();
    if (z.values.size() != idx.count(k))
        throw DimensionMismatch("cochain does not belong to this complex");
    if (k == 0)
        return z.is_zero() ? std::optional<Cochain>(Cochain{-1, z.ring, {}}) : std::nullopt;
    if (k > space.dimension())
        return zero_cochain(idx, k - 1, z.ring);
    const auto& red = space.reduction();
    const auto zp = red.project(k, z.values, z.ring);
    std::vector<Integer> yp;
    try {
        yp = linalg::solve_mod(red.reduced_delta(k - 1), to_integers(zp), Integer(z.ring.modulus));
    } catch (const NoSolution&) {
        return std::nullopt;
    }
    std::vector<std::int64_t> ys(yp.size());
    for (std::size_t i = 0; i < yp.size(); ++i)
        ys[i] = to_int64(yp[i]);
    Cochain y{k - 1, z.ring, red.include(k - 1, ys, z.ring)};
    Cochain h{k - 1, z.ring, red.homotopy(k - 1, z.values, z.ring)};
    y = add(y, h);
    if (!(coboundary(idx, y) == z))
        throw std::logic_error("coboundary solver produced a wrong primitive");
    return y;
}

Ring SesSpec::sub() const
{
    switch (kind) {
    case Kind::Doubling:
    case Kind::TwoToPower:
        return Ring::mod(std::int64_t{1} << n);
    case Kind::Integral:
        return Ring::integers();
    case Kind::TwoToFour:
        return Ring::mod(2);
    }
    return Ring::integers();
}

Ring SesSpec::middle() const
{
    switch (kind) {
    case Kind::Doubling:
        return Ring::mod(std::int64_t{1} << (2 * n));
    case Kind::Integral:
        return Ring::integers();
    case Kind::TwoToPower:
        return Ring::mod(std::int64_t{1} << (n + 1));
    case Kind::TwoToFour:
        return Ring::mod(4);
    }
    return Ring::integers();
}

Ring SesSpec::quotient() const
{
    switch (kind) {
    case Kind::Doubling:
    case Kind::Integral:
        return Ring::mod(std::int64_t{1} << n);
    case Kind::TwoToPower:
    case Kind::TwoToFour:
        return Ring::mod(2);
    }
    return Ring::integers();
}

std::int64_t SesSpec::factor() const
{
    return quotient().modulus;
}

CohomologyClass connecting(const Space& space, const SesSpec& ses, const CohomologyClass& x)
{
    if (!(x.ring == ses.quotient()))
        throw RingMismatch("class ring " + x.ring.name() + " is not the quotient ring " + ses.quotient().name());
    const auto& idx = space.index();
    Cochain c = coboundary(idx, lift(x.rep));
    Cochain e = reduce(divide_exact(c, ses.factor()), ses.sub());
    return class_of(space, e);
}

CohomologyClass change_coeffs(const Space& space, const CohomologyClass& x, Ring target)
{
    if (x.ring == target)
        return x;
    if (x.ring.is_integers())
        return class_of(space, reduce(x.rep, target));
    if (target.is_integers())
        throw RingMismatch("cannot change Z/m coefficients to Z");
    if (x.ring.modulus % target.modulus == 0)
        return class_of(space, reduce(x.rep, target));
    if (target.modulus % x.ring.modulus == 0) {
        Cochain r = lift(x.rep);
        r = scale(r, target.modulus / x.ring.modulus);
        return class_of(space, reduce(r, target));
    }
    throw RingMismatch("no coefficient map from " + x.ring.name() + " to " + target.name());
}

Cochain integral_rep(const CohomologyClass& x)
{
    return lift(x.rep);
}

std::vector<CohomologyClass> sample_elements(const Space& space, const CohomologyGroup& g, std::size_t cap)
{
    std::vector<CohomologyClass> out;
    const std::int64_t size = g.size();
    if (size > 0 && static_cast<std::size_t>(size) <= cap) {
        std::vector<std::int64_t> c(g.rank(), 0);
        for (std::int64_t t = 0; t < size; ++t) {
            out.push_back(class_from_coords(space, g.ring, g.degree, c));
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (++c[j] < g.order(j))
                    break;
                c[j] = 0;
            }
        }
        return out;
    }
    out.push_back(zero_class(space, g.ring, g.degree));
    for (std::size_t a = 0; a < g.rank(); ++a) {
        std::vector<std::int64_t> c(g.rank(), 0);
        c[a] = 1;
        out.push_back(class_from_coords(space, g.ring, g.degree, c));
        for (std::size_t b = a + 1; b < g.rank(); ++b) {
            auto d = c;
            d[b] = 1;
            out.push_back(class_from_coords(space, g.ring, g.degree, d));
        }
    }
    return out;
}

} // namespace linkform
