#include "linkform/steenrod.hpp"

#include <random>

#include "linkform/cup.hpp"
#include "linkform/errors.hpp"

namespace linkform {

CohomologyClass cup(const Space& space, const CohomologyClass& x, const CohomologyClass& y)
{
    return class_of(space, cup(space.index(), x.rep, y.rep));
}

int two_power_exponent(Ring ring)
{
    if (ring.is_integers() || ring.modulus < 2 || (ring.modulus & (ring.modulus - 1)) != 0)
        throw RingMismatch("expected coefficients Z/2^n, got " + ring.name());
    return __builtin_ctzll(static_cast<unsigned long long>(ring.modulus));
}

CohomologyClass sq(const Space& space, int i, const CohomologyClass& x)
{
    if (!(x.ring == Ring::mod(2)))
        throw RingMismatch("Steenrod squares need Z/2 coefficients");
    const int r = x.degree;
    if (i < 0 || i > r)
        return zero_class(space, x.ring, r + i < 0 ? 0 : r + i);
    return class_of(space, cup_i(space.index(), x.rep, x.rep, r - i));
}

CohomologyClass gen_sq(const Space& space, int i, const CohomologyClass& x)
{
    const int n = two_power_exponent(x.ring);
    const int r = x.degree;
    if (i < 0 || i > r)
        return zero_class(space, x.ring, r + i < 0 ? 0 : r + i);
    Cochain c = cup_i(space.index(), x.rep, x.rep, r - i);
    if (i % 2 == 0)
        c = scale(c, std::int64_t{1} << (n - 1));
    return class_of(space, c);
}

linalg::Lattice bockstein_image(const Space& space, int n, int k)
{
    const Ring ring = Ring::mod(std::int64_t{1} << n);
    const auto& target = space.cohomology(ring, k);
    linalg::DenseMatrix gens;
    if (k >= 1) {
        const auto& source = space.cohomology(ring, k - 1);
        for (std::size_t j = 0; j < source.rank(); ++j) {
            std::vector<std::int64_t> e(source.rank(), 0);
            e[j] = 1;
            auto b = connecting(space, SesSpec::doubling(n), class_from_coords(space, ring, k - 1, e));
            gens.emplace_back(b.coords.begin(), b.coords.end());
        }
    }
    return linalg::Lattice::span(target.rank(), gens) + target.relations();
}

Coset coset_of(const Space& space, const CohomologyClass& y)
{
    const int n = two_power_exponent(y.ring);
    const auto lat = bockstein_image(space, n, y.degree);
    auto red = lat.reduce(linalg::IntVector(y.coords.begin(), y.coords.end()));
    Coset c;
    c.degree = y.degree;
    c.ring = y.ring;
    for (const auto& v : red)
        c.canonical.push_back(to_int64(v));
    c.representative = y;
    return c;
}

Coset beta2_with_lift(const Space& space, const CohomologyClass& x, std::uint64_t seed)
{
    const std::int64_t m = x.ring.modulus;
    const auto& idx = space.index();
    const int k = x.degree;
    Cochain u = x.rep;
    Cochain shift = zero_cochain(idx, k, Ring::integers());
    std::mt19937_64 rng(seed);
    if (seed != 0) {
        if (k >= 1)
            u = add(u, coboundary(idx, random_cochain(idx, k - 1, x.ring, rng)));
        shift = scale(random_cochain(idx, k, Ring::integers(), rng), m);
    }
    // a lifts u to Z; delta a = m * c with c a cocycle mod m representing beta(x).
    Cochain a = add(lift(u), shift);
    Cochain c = reduce(divide_exact(coboundary(idx, a), m), x.ring);
    auto y = solve_coboundary(space, c);
    if (!y)
        throw NotInKernel("class is not in the kernel of the Bockstein");
    if (seed != 0) {
        const auto& g = space.cohomology(x.ring, k);
        for (std::size_t j = 0; j < g.rank(); ++j)
            y = add(*y, scale(g.generators[j], static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m))));
    }
    Cochain b = lift(*y);
    Cochain top = coboundary(idx, subtract(a, scale(b, m)));
    Cochain e = reduce(divide_exact(top, m * m), x.ring);
    return coset_of(space, class_of(space, e));
}

Coset beta2(const Space& space, const CohomologyClass& x)
{
    Coset first = beta2_with_lift(space, x, 0);
    Coset second = beta2_with_lift(space, x, 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(x.degree));
    if (!(first == second))
        throw std::logic_error("secondary Bockstein depends on the choice of lift");
    return first;
}

} // namespace linkform
