#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "linkform/cochains.hpp"
#include "linkform/complex.hpp"
#include "linkform/errors.hpp"
#include "oracles.hpp"

using namespace linkform;

TEST(Complex, MakeComplexRenumbersAndSorts)
{
    const auto k = make_complex("k", {{10, 5, 7}, {7, 12}, {5, 10, 7}});
    EXPECT_EQ(k.vertex_count, 4);
    EXPECT_EQ(k.dimension, 2);
    EXPECT_EQ(k.facets, (std::vector<Simplex>{{0, 1, 2}, {1, 3}}));
}

TEST(Complex, MakeComplexRejectsBadInput)
{
    EXPECT_THROW(make_complex("k", {}), ValidationError);
    EXPECT_THROW(make_complex("k", {{}}), ValidationError);
    EXPECT_THROW(make_complex("k", {{1, 2, 1}}), ValidationError);
}

TEST(Complex, SphereFaceCounts)
{
    for (int n = 0; n <= 6; ++n) {
        const auto f = f_vector(sphere(n));
        ASSERT_EQ(f.size(), static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(f[k], static_cast<std::size_t>(oracle::binomial(n + 2, k + 1))) << "n=" << n << " k=" << k;
    }
    EXPECT_THROW(sphere(-1), ValidationError);
}

TEST(Complex, SuspensionFaceCounts)
{
    for (const auto& k : {sphere(1), rp_space(2), product(sphere(1), sphere(1))}) {
        const auto f = f_vector(k);
        const auto g = f_vector(suspension(k));
        ASSERT_EQ(g.size(), f.size() + 1);
        EXPECT_EQ(g[0], f[0] + 2);
        for (std::size_t i = 1; i < g.size(); ++i)
            EXPECT_EQ(g[i], (i < f.size() ? f[i] : 0) + 2 * f[i - 1]);
    }
}

TEST(Complex, ProductFacetCount)
{
    const auto a = sphere(1), b = sphere(2);
    const auto p = product(a, b);
    EXPECT_EQ(p.dimension, 3);
    EXPECT_EQ(p.vertex_count, a.vertex_count * b.vertex_count);
    EXPECT_EQ(p.facets.size(), a.facets.size() * b.facets.size() * oracle::binomial(3, 1));
}

TEST(Complex, ProjectiveSpaceFaceCounts)
{
    for (int n = 1; n <= 5; ++n) {
        const auto k = rp_space(n);
        EXPECT_EQ(k.dimension, n);
        EXPECT_EQ(k.facets.size(), static_cast<std::size_t>(oracle::factorial(n + 2) / 2));
        EXPECT_EQ(k.vertex_count, (1 << (n + 1)) - 1);
    }
    EXPECT_THROW(rp_space(0), ValidationError);
}

TEST(Complex, LensSpaceFacetCount)
{
    // (2p)^2 join tetrahedra, 24 flags each, divided by the group order.
    for (int p : {2, 3, 4, 8})
        EXPECT_EQ(lens_space(p, 1).facets.size(), static_cast<std::size_t>(96 * p));
    EXPECT_THROW(lens_space(4, 2), ValidationError);
    EXPECT_THROW(lens_space(1, 1), ValidationError);
}

TEST(Complex, EulerCharacteristic)
{
    auto chi = [](const SimplicialComplex& k) {
        long long c = 0;
        const auto f = f_vector(k);
        for (std::size_t i = 0; i < f.size(); ++i)
            c += i % 2 ? -static_cast<long long>(f[i]) : static_cast<long long>(f[i]);
        return c;
    };
    EXPECT_EQ(chi(sphere(2)), 2);
    EXPECT_EQ(chi(rp_space(2)), 1);
    EXPECT_EQ(chi(rp_space(4)), 1);
    EXPECT_EQ(chi(rp_space(5)), 0);
    EXPECT_EQ(chi(lens_space(4, 1)), 0);
    EXPECT_EQ(chi(product(sphere(1), sphere(1))), 0);
}

TEST(Complex, JsonRoundTripAndHash)
{
    const auto k = rp_space(2);
    const auto back = load_complex(to_json(k));
    EXPECT_EQ(back.facets, k.facets);
    EXPECT_EQ(back.name, k.name);
    EXPECT_EQ(content_hash(back), content_hash(k));
    EXPECT_EQ(content_hash(k).size(), 16u);
    EXPECT_NE(content_hash(k), content_hash(sphere(2)));

    // Relabelling with an order-preserving map gives the same complex.
    const auto shifted = make_complex("x", {{3, 5, 9}, {3, 5, 11}, {3, 9, 11}, {5, 9, 11}});
    EXPECT_EQ(content_hash(shifted), content_hash(sphere(2)));

    const auto path = (std::filesystem::temp_directory_path() / "linkform_roundtrip.json").string();
    save_complex_file(k, path);
    EXPECT_EQ(load_complex_file(path).facets, k.facets);
    std::remove(path.c_str());
}

TEST(Complex, LoadRejectsMalformedJson)
{
    EXPECT_THROW(load_complex("{"), ParseError);
    EXPECT_THROW(load_complex("[1,2]"), ParseError);
    EXPECT_THROW(load_complex(R"({"facets": 3})"), ParseError);
    EXPECT_THROW(load_complex(R"({"facets": [[0, "a"]]})"), ParseError);
    EXPECT_THROW(load_complex(R"({"name": 4, "facets": [[0, 1]]})"), ParseError);
    EXPECT_THROW(load_complex(R"({"facets": [[0, 0]]})"), ValidationError);
    EXPECT_THROW(load_complex_file("/nonexistent/linkform.json"), ParseError);
}

TEST(Complex, CoverOfProjectiveSpace)
{
    for (int n = 1; n <= 4; ++n) {
        const auto cov = rp_cover(n);
        const auto base = rp_space(n);
        EXPECT_EQ(cov.cover.facets.size(), 2 * base.facets.size());
        ASSERT_EQ(cov.vertex_map.size(), static_cast<std::size_t>(cov.cover.vertex_count));
        std::vector<int> preimages(base.vertex_count);
        for (auto v : cov.vertex_map)
            ++preimages.at(v);
        for (int c : preimages)
            EXPECT_EQ(c, 2);
        const SimplexIndex idx(base);
        for (const auto& f : cov.cover.facets) {
            Simplex img;
            for (auto v : f)
                img.push_back(cov.vertex_map[v]);
            std::sort(img.begin(), img.end());
            EXPECT_TRUE(idx.find(img).has_value());
        }
        // The cover is a sphere.
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(oracle::cohomology_orders(cov.cover, 0, k),
                      (k == 0 || k == n) ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{});
    }
}

TEST(Cochains, CoboundarySquaresToZero)
{
    for (const auto& k : {sphere(3), rp_space(3), lens_space(3, 1), product(sphere(1), sphere(2))}) {
        const auto cc = coboundary_matrices(k, Ring::integers());
        for (std::size_t d = 0; d + 1 < cc.delta.size(); ++d)
            EXPECT_TRUE((cc.delta[d + 1] * cc.delta[d]).is_zero()) << k.name << " degree " << d;
    }
}

TEST(Cochains, MatrixAgreesWithCochainCoboundary)
{
    const auto k = rp_space(3);
    const SimplexIndex idx(k);
    const auto cc = coboundary_matrices(k, Ring::integers());
    std::mt19937_64 rng(7);
    for (int d = 0; d < 3; ++d) {
        const auto u = random_cochain(idx, d, Ring::mod(8), rng);
        const auto du = coboundary(idx, lift(u));
        std::vector<Integer> x(u.values.begin(), u.values.end());
        const auto y = cc.delta[d].apply(x);
        ASSERT_EQ(y.size(), du.values.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            EXPECT_EQ(y[i], du.values[i]);
    }
}

TEST(Cochains, RingArithmetic)
{
    const SimplexIndex idx(sphere(2));
    const Ring z4 = Ring::mod(4);
    auto a = make_cochain(idx, 1, z4, {1, 2, 3, 0, 5, -1});
    EXPECT_EQ(a.values, (std::vector<std::int64_t>{1, 2, 3, 0, 1, 3}));
    EXPECT_EQ(add(a, a).values, (std::vector<std::int64_t>{2, 0, 2, 0, 2, 2}));
    EXPECT_TRUE(subtract(a, a).is_zero());
    EXPECT_EQ(reduce(a, Ring::mod(2)).values, (std::vector<std::int64_t>{1, 0, 1, 0, 1, 1}));
    EXPECT_EQ(lift(a).ring, Ring::integers());
    EXPECT_THROW(add(a, make_cochain(idx, 1, Ring::mod(2), std::vector<std::int64_t>(6))), RingMismatch);
    EXPECT_THROW(add(a, zero_cochain(idx, 2, z4)), DimensionMismatch);
}

TEST(Cochains, PullbackAlongCoveringIsACochainMap)
{
    const auto cov = rp_cover(3);
    const SimplexIndex up(cov.cover), down(rp_space(3));
    std::mt19937_64 rng(31);
    for (int d = 0; d < 3; ++d) {
        const auto u = random_cochain(down, d, Ring::integers(), rng);
        const auto lhs = coboundary(up, pullback(up, down, cov.vertex_map, u));
        const auto rhs = pullback(up, down, cov.vertex_map, coboundary(down, u));
        EXPECT_EQ(lhs, rhs) << "degree " << d;
    }
}

TEST(Complex, SmallPinnedShapes)
{
    const auto circle = make_complex("c", {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(circle.dimension, 1);
    EXPECT_EQ(circle.facets.size(), 3u);
    EXPECT_EQ(make_complex("t", {{0, 1, 2}}).dimension, 2);

    const auto s1 = sphere(1);
    EXPECT_EQ(s1.vertex_count, 3);
    EXPECT_EQ(f_vector(s1), (std::vector<std::size_t>{3, 3}));
    EXPECT_EQ(f_vector(sphere(2)), (std::vector<std::size_t>{4, 6, 4}));
    EXPECT_EQ(sphere(5).vertex_count, 7);
    EXPECT_EQ(sphere(5).facets.size(), 7u);

    const auto edge = make_complex("e", {{0, 1}});
    const auto square = product(edge, edge);
    EXPECT_EQ(square.dimension, 2);
    EXPECT_EQ(square.facets.size(), 2u);
    EXPECT_EQ(square.vertex_count, 4);

    const auto cone = suspension(make_complex("pt", {{0}}));
    EXPECT_EQ(cone.dimension, 1);
    EXPECT_EQ(f_vector(cone), (std::vector<std::size_t>{3, 2}));

    EXPECT_EQ(rp_space(5).facets.size(), 2520u);
}
