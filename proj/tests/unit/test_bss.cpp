#include <gtest/gtest.h>

#include <bit>

#include "linkform/bss.hpp"
#include "oracles.hpp"

using namespace linkform;

namespace {

int log2_size(const CohomologyGroup& g)
{
    return std::countr_zero(static_cast<std::uint64_t>(g.size()));
}

} // namespace

TEST(Bss, LensSpaceClassDiesAtThePageOfItsTorsion)
{
    for (int k = 1; k <= 3; ++k) {
        const std::string name = "L" + std::to_string(1 << k) + "1";
        const auto& s = k == 1 ? oracle::fixture("L21") : oracle::fixture(name);
        // Independent torsion order of H^2(L; Z).
        ASSERT_EQ(oracle::cohomology_orders(s.complex(), 0, 2), std::vector<std::int64_t>{1 << k});
        for (int r = 1; r <= 4; ++r) {
            const auto page = bss_page(s, 1, r);
            EXPECT_EQ(page.differential_length(1), r == k ? 1 : 0) << "k=" << k << " r=" << r;
            EXPECT_EQ(page.differential_length(2), 0);
            EXPECT_EQ(page.length(2), r <= k ? 1 : 0) << "k=" << k << " r=" << r;
            EXPECT_EQ(page.length(0), 1);
            EXPECT_EQ(page.length(3), 1);
            if (r == k) {
                ASSERT_EQ(page.pieces[1].lift_orders.size(), 1u);
                EXPECT_EQ(page.pieces[1].lift_orders[0], std::int64_t{1} << k);
            }
        }
    }
}

TEST(Bss, FirstPageIsModularCohomology)
{
    for (const auto& name : {"RP3", "L41", "T2"}) {
        const auto& s = oracle::fixture(name);
        for (int n = 1; n <= 2; ++n) {
            const auto page = bss_page(s, n, 1);
            for (int k = 0; k <= s.dimension(); ++k)
                EXPECT_EQ(page.length(k), log2_size(s.cohomology(Ring::mod(std::int64_t{1} << n), k)))
                    << name << " n=" << n << " k=" << k;
        }
    }
}

TEST(Bss, TorsionFreeSpacesHaveNoDifferentials)
{
    for (const auto& name : {"S1", "S2", "T2", "S5"}) {
        const auto& s = oracle::fixture(name);
        for (int r = 1; r <= 3; ++r) {
            const auto page = bss_page(s, 1, r);
            for (int k = 0; k <= s.dimension(); ++k) {
                EXPECT_EQ(page.differential_length(k), 0);
                EXPECT_EQ(page.length(k), s.cohomology(Ring::integers(), k).free_rank);
            }
        }
    }
}

TEST(Bss, ProjectiveSpaceCollapsesAfterTheFirstPage)
{
    // d_1 = Sq^1 pairs a with a^2 and a^3 with a^4; only degrees 0 and 5
    // survive, as the free part of H^*(RP5; Z).
    const auto& s = oracle::fixture("RP5");
    const auto p1 = bss_page(s, 1, 1);
    for (int k = 0; k <= 5; ++k)
        EXPECT_EQ(p1.differential_length(k), k == 1 || k == 3 ? 1 : 0) << k;
    for (int r = 2; r <= 3; ++r) {
        const auto page = bss_page(s, 1, r);
        for (int k = 0; k <= 5; ++k) {
            EXPECT_EQ(page.length(k), k == 0 || k == 5 ? 1 : 0);
            EXPECT_EQ(page.differential_length(k), 0);
        }
    }
}

TEST(Bss, FourAdicSequenceOfOrderEightTorsion)
{
    // With n = 2, d_1 sends the generator x of H^1(L(8,1); Z/4) to twice a
    // generator (lift order 4); 2x survives and d_2 kills the rest of
    // degree 2 (lift order 8, in (4, 16]).
    const auto& s = oracle::fixture("L81");
    const auto p1 = bss_page(s, 2, 1);
    EXPECT_EQ(p1.length(2), 2);
    EXPECT_EQ(p1.differential_length(1), 1);
    EXPECT_EQ(p1.pieces[1].lift_orders, std::vector<std::int64_t>{4});
    const auto p2 = bss_page(s, 2, 2);
    EXPECT_EQ(p2.length(2), 1);
    EXPECT_EQ(p2.differential_length(1), 1);
    EXPECT_EQ(p2.pieces[1].lift_orders, std::vector<std::int64_t>{8});
    EXPECT_EQ(bss_page(s, 2, 3).length(2), 0);
}

TEST(Bss, PagesAreInternallyConsistent)
{
    for (const auto& name : {"RP2", "RP3", "L41", "L81", "L83", "T2"}) {
        const auto& s = oracle::fixture(name);
        for (int n = 1; n <= 2; ++n)
            for (int r = 1; r <= 4; ++r)
                EXPECT_TRUE(check_bss_page(s, n, r).empty()) << name << " n=" << n << " r=" << r;
    }
}
