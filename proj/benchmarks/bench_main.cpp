#include <benchmark/benchmark.h>

#include <random>

#include "linkform/cohomology.hpp"
#include "linkform/cup.hpp"
#include "linkform/gf2.hpp"
#include "linkform/snf.hpp"
#include "linkform/steenrod.hpp"

using namespace linkform;

namespace {

linalg::IntMatrix sparse_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(-3, 3), per(1, 4);
    std::uniform_int_distribution<std::size_t> col(0, n - 1);
    linalg::IntMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (int i = per(rng); i > 0; --i)
            if (int v = value(rng))
                a.set(r, col(rng), v);
    return a;
}

void BM_SmithNormalForm(benchmark::State& state)
{
    const auto a = sparse_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(linalg::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RankGf2(benchmark::State& state)
{
    const auto a = sparse_matrix(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(linalg::rank_gf2(a));
}
BENCHMARK(BM_RankGf2)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_CochainReduction(benchmark::State& state)
{
    const auto k = rp_space(static_cast<int>(state.range(0)));
    const SimplexIndex idx(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(ChainReduction(idx));
}
BENCHMARK(BM_CochainReduction)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state)
{
    const auto k = rp_space(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const Space s(k);
        for (int d = 0; d <= s.dimension(); ++d)
            benchmark::DoNotOptimize(s.cohomology(Ring::integers(), d));
    }
}
BENCHMARK(BM_Cohomology)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CupI(benchmark::State& state)
{
    const Space s(rp_space(5));
    const auto& idx = s.index();
    std::mt19937_64 rng(3);
    const auto u = random_cochain(idx, 2, Ring::mod(8), rng);
    const auto v = random_cochain(idx, 2, Ring::mod(8), rng);
    const int i = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cup_i(idx, u, v, i));
}
BENCHMARK(BM_CupI)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_SteenrodSquare(benchmark::State& state)
{
    const Space s(rp_space(5));
    const auto a = class_from_coords(s, Ring::mod(2), 2, {1});
    for (auto _ : state)
        benchmark::DoNotOptimize(sq(s, 2, a));
}
BENCHMARK(BM_SteenrodSquare)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
