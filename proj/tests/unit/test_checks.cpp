#include <gtest/gtest.h>

#include "linkform/checks.hpp"
#include "oracles.hpp"

using namespace linkform;

namespace {

void expect_clean(const std::vector<SuiteResult>& results, const std::string& where)
{
    for (const auto& r : results) {
        const auto* f = r.first_failure();
        EXPECT_TRUE(r.passed()) << where << " " << r.suite << ": " << (f ? f->name + " " + f->counterexample : "");
        EXPECT_EQ(r.failed(), 0u);
    }
}

SuiteOptions quick()
{
    SuiteOptions opt;
    opt.pairs_per_degree = 10;
    opt.n_max = 2;
    opt.bss_pages = 3;
    return opt;
}

} // namespace

TEST(Suites, SmallFixturesPassEverything)
{
    for (const auto& name : {"S1", "S2", "T2", "RP2", "RP3", "L41"}) {
        const auto results = run_suite(oracle::fixture(name), "all", 1, quick());
        ASSERT_EQ(results.size(), 5u) << name;
        expect_clean(results, name);
        for (const auto& r : results)
            if (oracle::fixture(name).dimension() % 4 != 1 && (r.suite == "pairing" || r.suite == "theorem73")) {
                EXPECT_FALSE(r.skipped.empty()) << name << " " << r.suite;
            } else {
                EXPECT_GT(r.checked(), 0u) << name << " " << r.suite;
            }
    }
}

TEST(Suites, FiveDimensionalSuites)
{
    const auto& s = oracle::fixture("RP5");
    for (const auto& suite : {"pairing", "theorem73", "bss"})
        expect_clean(run_suite(s, suite, 1, quick()), std::string("RP5 ") + suite);
}

TEST(Suites, CochainIdentitiesCountPairs)
{
    SuiteOptions opt = quick();
    opt.moduli = {2};
    opt.max_cup_index = 0;
    const auto r = check_cochain_identities(oracle::fixture("S2"), 3, opt);
    // One batch per target degree 0 and 1.
    EXPECT_EQ(r.checked(), 2 * opt.pairs_per_degree);
    EXPECT_TRUE(r.passed());
}

TEST(Suites, SeedsGiveReproducibleCounts)
{
    const auto a = check_cochain_identities(oracle::fixture("RP2"), 9, quick());
    const auto b = check_cochain_identities(oracle::fixture("RP2"), 9, quick());
    EXPECT_EQ(a.checked(), b.checked());
}

TEST(Suites, ErrorsForUnknownOrInapplicableSuites)
{
    EXPECT_THROW(run_suite(oracle::fixture("S1"), "nonsense", 0), ValidationError);
    EXPECT_THROW(run_suite(oracle::fixture("L41"), "pairing", 0), ParityError);
    EXPECT_THROW(run_suite(oracle::fixture("RP2"), "theorem73", 0), ParityError);
    EXPECT_EQ(suite_names().back(), "all");
}

TEST(Suites, FailureBookkeeping)
{
    SuiteResult s;
    s.checks.push_back({"a", 3, 0, ""});
    s.checks.push_back({"b", 2, 1, "witness"});
    EXPECT_FALSE(s.passed());
    EXPECT_EQ(s.checked(), 5u);
    EXPECT_EQ(s.failed(), 1u);
    ASSERT_NE(s.first_failure(), nullptr);
    EXPECT_EQ(s.first_failure()->counterexample, "witness");
}

TEST(Suites, DescribeNamesDegreeRingAndCoordinates)
{
    const auto& s = oracle::fixture("T2");
    const auto x = class_from_coords(s, Ring::mod(4), 1, {1, 3});
    const auto text = describe(x);
    EXPECT_NE(text.find("H^1"), std::string::npos);
    EXPECT_NE(text.find("Z/4"), std::string::npos);
}
