#include "toricstab/fans.hpp"
#include "toricstab/polyprod.hpp"
#include "toricstab/verify.hpp"

#include <benchmark/benchmark.h>

using namespace toric;

namespace {

SubsetCollection pair_family(int n)
{
    SubsetCollection I{n, {}, true};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            I.members.push_back(IndexSet({i, j}));
    return I;
}

void BM_BuildComplex(benchmark::State& state)
{
    const SubsetCollection I = pair_family(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_complex(I));
}

void BM_PrimitiveSets(benchmark::State& state)
{
    const Fan F = build_fan(build_complex(pair_family(static_cast<int>(state.range(0)))));
    for (auto _ : state)
        benchmark::DoNotOptimize(primitive_sets(F));
}

void BM_WedgeIdentity(benchmark::State& state)
{
    Rng rng(1);
    const SubsetCollection I = random_collection(
        rng, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(wedge_identity_check(I));
}

void BM_BandScanGeneral(benchmark::State& state)
{
    const int r = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    const StabilityParams p{r, r, d};
    for (auto _ : state)
        benchmark::DoNotOptimize(band_scan(p, ScanMode::general));
}

void BM_PolyGcd(benchmark::State& state)
{
    Rng rng(2);
    const RootMultiset common = random_multiset(rng, 4);
    std::vector<MonicPolynomial> polys;
    for (int i = 0; i < 3; ++i) {
        std::vector<RootMultiset::Entry> entries = common.entries();
        const RootMultiset extra = random_multiset(rng, static_cast<int>(state.range(0)));
        for (const auto& e : extra.entries()) {
            bool clash = false;
            for (const auto& s : entries)
                if (s.point == e.point)
                    clash = true;
            if (!clash)
                entries.push_back(e);
        }
        polys.push_back(expand_roots(RootMultiset(std::move(entries))));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_gcd(polys));
}

}  // namespace

BENCHMARK(BM_BuildComplex)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_PrimitiveSets)->Arg(8)->Arg(12);
BENCHMARK(BM_WedgeIdentity)->Arg(8)->Arg(12);
BENCHMARK(BM_BandScanGeneral)->Args({3, 10})->Args({5, 20})->Args({8, 30});
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
