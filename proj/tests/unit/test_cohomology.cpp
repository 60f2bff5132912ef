#include <gtest/gtest.h>

#include <set>

#include "linkform/cohomology.hpp"
#include "oracles.hpp"

using namespace linkform;

namespace {

const std::vector<std::string> small_fixtures{"S1", "S2", "T2", "RP2", "RP3", "L41", "L81", "L83"};

std::vector<std::int64_t> orders(const Space& s, std::int64_t m, int k)
{
    return oracle::primary_parts(oracle::group_orders(s.cohomology(Ring{m}, k)));
}

} // namespace

TEST(Cohomology, MatchesUnreducedSnfOracle)
{
    for (const auto& name : small_fixtures) {
        const auto& s = oracle::fixture(name);
        for (std::int64_t m : {0, 2, 4, 8, 3})
            for (int k = 0; k <= s.dimension() + 1; ++k)
                EXPECT_EQ(orders(s, m, k), oracle::primary_parts(oracle::cohomology_orders(s.complex(), m, k)))
                    << name << " m=" << m << " k=" << k;
    }
}

TEST(Cohomology, KnownGroups)
{
    // Z, 0, Z/2, 0, Z/2, Z for RP5; Z, 0, Z/p, Z for L(p, q).
    const std::vector<std::vector<std::int64_t>> rp5{{0}, {}, {2}, {}, {2}, {0}};
    const auto& s = oracle::fixture("RP5");
    for (int k = 0; k <= 5; ++k)
        EXPECT_EQ(oracle::group_orders(s.cohomology(Ring::integers(), k)), rp5[k]) << k;
    for (int k = 0; k <= 5; ++k)
        EXPECT_EQ(oracle::group_orders(s.cohomology(Ring::mod(2), k)), std::vector<std::int64_t>{2}) << k;
    const auto& l = oracle::fixture("L81");
    EXPECT_EQ(oracle::group_orders(l.cohomology(Ring::integers(), 2)), std::vector<std::int64_t>{8});
    EXPECT_EQ(oracle::group_orders(l.cohomology(Ring::mod(4), 1)), std::vector<std::int64_t>{4});
    EXPECT_TRUE(l.cohomology(Ring::integers(), 1).is_zero());
    EXPECT_TRUE(l.cohomology(Ring::integers(), 4).is_zero());
}

TEST(Cohomology, ReductionIsSmallerThanTheComplex)
{
    const auto& s = oracle::fixture("RP5");
    const auto& red = s.reduction();
    for (int k = 0; k <= 5; ++k) {
        EXPECT_LE(red.critical_count(k), red.original_count(k));
        // Z/2 Betti numbers bound the critical cells from below.
        EXPECT_GE(red.critical_count(k), 1u);
    }
}

TEST(Cohomology, ReductionIsAChainHomotopyEquivalence)
{
    const auto& s = oracle::fixture("RP3");
    const auto& idx = s.index();
    const auto& red = s.reduction();
    const Ring z = Ring::integers();
    std::mt19937_64 rng(41);
    for (int k = 0; k <= 3; ++k) {
        // p i = id
        std::vector<std::int64_t> y(red.critical_count(k));
        for (auto& v : y)
            v = static_cast<std::int64_t>(rng() % 7) - 3;
        EXPECT_EQ(red.project(k, red.include(k, y, z), z), y);
        // x - i p x = delta h x + h delta x
        const auto x = random_cochain(idx, k, z, rng);
        const auto ipx = red.include(k, red.project(k, x.values, z), z);
        Cochain lhs = subtract(x, make_cochain(idx, k, z, ipx));
        Cochain rhs = zero_cochain(idx, k, z);
        if (k > 0)
            rhs = add(rhs, coboundary(idx, make_cochain(idx, k - 1, z, red.homotopy(k - 1, x.values, z))));
        if (k < 3)
            rhs = add(rhs, make_cochain(idx, k, z, red.homotopy(k, coboundary(idx, x).values, z)));
        EXPECT_EQ(lhs, rhs) << "degree " << k;
    }
}

TEST(Cohomology, GeneratorsAreCocyclesWithTheRightOrders)
{
    for (const auto& name : small_fixtures) {
        const auto& s = oracle::fixture(name);
        for (std::int64_t m : {0, 4}) {
            for (int k = 0; k <= s.dimension(); ++k) {
                const auto& g = s.cohomology(Ring{m}, k);
                for (std::size_t j = 0; j < g.rank(); ++j) {
                    EXPECT_TRUE(is_cocycle(s.index(), g.generators[j]));
                    std::vector<std::int64_t> e(g.rank());
                    e[j] = 1;
                    EXPECT_EQ(g.express(s, g.generators[j]), e);
                    const auto x = class_from_coords(s, Ring{m}, k, e);
                    if (g.order(j) != 0) {
                        EXPECT_TRUE(is_zero(scale(s, x, g.order(j))));
                        if (g.order(j) % 2 == 0) {
                            EXPECT_FALSE(is_zero(scale(s, x, g.order(j) / 2)));
                        }
                    }
                }
            }
        }
    }
}

TEST(Cohomology, ClassArithmeticIsCoordinateArithmetic)
{
    const auto& s = oracle::fixture("T2");
    const Ring z4 = Ring::mod(4);
    const auto a = class_from_coords(s, z4, 1, {1, 3});
    const auto b = class_from_coords(s, z4, 1, {2, 2});
    EXPECT_EQ(add(s, a, b).coords, (std::vector<std::int64_t>{3, 1}));
    EXPECT_EQ(scale(s, a, -1).coords, (std::vector<std::int64_t>{3, 1}));
    EXPECT_TRUE(is_zero(add(s, a, scale(s, a, 3))));
    EXPECT_TRUE(same_class(class_of(s, add(a.rep, b.rep)), add(s, a, b)));
    EXPECT_THROW(class_from_coords(s, z4, 1, {1}), DimensionMismatch);
    EXPECT_THROW(add(s, a, class_from_coords(s, Ring::mod(2), 1, {1, 0})), RingMismatch);
}

TEST(Cohomology, CoboundariesRepresentZero)
{
    const auto& s = oracle::fixture("RP3");
    const auto& idx = s.index();
    std::mt19937_64 rng(43);
    for (Ring ring : {Ring::integers(), Ring::mod(2), Ring::mod(4)}) {
        for (int k = 0; k < 3; ++k) {
            const auto c = random_cochain(idx, k, ring, rng);
            const auto z = coboundary(idx, c);
            EXPECT_TRUE(is_zero(class_of(s, z)));
            const auto y = solve_coboundary(s, z);
            ASSERT_TRUE(y.has_value());
            EXPECT_EQ(coboundary(idx, *y), z);
        }
    }
    // The generator of H^2(RP3; Z) = Z/2 is not a coboundary.
    const auto& g = s.cohomology(Ring::integers(), 2);
    EXPECT_FALSE(solve_coboundary(s, g.generators[0]).has_value());

    auto bad = zero_cochain(idx, 1, Ring::integers());
    bad.values[0] = 1;
    EXPECT_THROW(class_of(s, bad), NotACocycle);
}

TEST(Cohomology, BocksteinSequencesAreExact)
{
    // |ker beta| |im beta| = |H^k(quotient)| and ker beta = im(reduction).
    const auto& s = oracle::fixture("L81");
    for (int n = 1; n <= 3; ++n) {
        const auto ses = SesSpec::doubling(n);
        for (int k = 0; k < 3; ++k) {
            const auto& h = s.cohomology(ses.quotient(), k);
            const auto xs = sample_elements(s, h, 1024);
            ASSERT_EQ(static_cast<std::int64_t>(xs.size()), h.size());
            std::size_t ker = 0;
            std::set<std::vector<std::int64_t>> image;
            for (const auto& x : xs) {
                const auto b = connecting(s, ses, x);
                ker += is_zero(b);
                image.insert(b.coords);
            }
            std::set<std::vector<std::int64_t>> reductions;
            for (const auto& y : sample_elements(s, s.cohomology(ses.middle(), k), 4096))
                reductions.insert(change_coeffs(s, y, ses.quotient()).coords);
            EXPECT_EQ(ker * image.size(), xs.size()) << "n=" << n << " k=" << k;
            EXPECT_EQ(ker, reductions.size()) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Cohomology, IntegralBocksteinOfLensSpace)
{
    // beta~ : H^1(L(8,1); Z/2^n) -> H^2(L(8,1); Z) = Z/8 has image of order 2^n.
    const auto& s = oracle::fixture("L81");
    for (int n = 1; n <= 3; ++n) {
        const auto x = class_from_coords(s, Ring::mod(std::int64_t{1} << n), 1, {1});
        const auto b = connecting(s, SesSpec::integral(n), x);
        EXPECT_EQ(b.ring, Ring::integers());
        std::int64_t order = 1;
        for (auto y = b; !is_zero(y); y = add(s, y, b))
            ++order;
        EXPECT_EQ(order, std::int64_t{1} << n) << n;
    }
    EXPECT_THROW(connecting(s, SesSpec::integral(2), class_from_coords(s, Ring::mod(2), 1, {1})), RingMismatch);
}

TEST(Cohomology, CoefficientChanges)
{
    const auto& s = oracle::fixture("RP3");
    const auto g = class_from_coords(s, Ring::integers(), 2, {1});
    EXPECT_FALSE(is_zero(change_coeffs(s, g, Ring::mod(2))));
    EXPECT_FALSE(is_zero(change_coeffs(s, g, Ring::mod(4))));
    const auto a = class_from_coords(s, Ring::mod(2), 1, {1});
    // Z/2 -> Z/4 is multiplication by 2; H^1(RP3; Z/4) = Z/2 so this is nonzero.
    const auto up = change_coeffs(s, a, Ring::mod(4));
    EXPECT_FALSE(is_zero(up));
    EXPECT_TRUE(same_class(change_coeffs(s, up, Ring::mod(2)), zero_class(s, Ring::mod(2), 1)));
    EXPECT_THROW(change_coeffs(s, a, Ring::integers()), RingMismatch);
    EXPECT_THROW(change_coeffs(s, a, Ring::mod(3)), RingMismatch);
}

TEST(Cohomology, SampleElementsEnumeratesSmallGroups)
{
    const auto& s = oracle::fixture("T2");
    const auto& g = s.cohomology(Ring::mod(4), 1);
    EXPECT_EQ(sample_elements(s, g, 64).size(), 16u);
    const auto few = sample_elements(s, g, 4);
    EXPECT_LT(few.size(), 16u);
    EXPECT_GE(few.size(), g.rank());
}
