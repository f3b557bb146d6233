#include <benchmark/benchmark.h>

#include "lozenge/ideal.hpp"
#include "lozenge/lefschetz.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/region.hpp"
#include "lozenge/tiling.hpp"

using namespace lozenge;

static void BM_DetZHexagon(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    MonomialIdeal I({Monomial(d / 2, 0, 0), Monomial(0, d / 2, 0), Monomial(0, 0, d / 2)});
    TriRegion T = buildRegion(I, d);
    for (auto _ : state) benchmark::DoNotOptimize(detExact(zMatrix(T)));
}
BENCHMARK(BM_DetZHexagon)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_PerZHexagon(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    MonomialIdeal I({Monomial(d / 2, 0, 0), Monomial(0, d / 2, 0), Monomial(0, 0, d / 2)});
    TriRegion T = buildRegion(I, d);
    for (auto _ : state) benchmark::DoNotOptimize(permanentExact(zMatrix(T)));
}
BENCHMARK(BM_PerZHexagon)->Arg(8)->Arg(10)->Arg(12);

static void BM_EnumerateTilings(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    MonomialIdeal I({Monomial(d / 2, 0, 0), Monomial(0, d / 2, 0), Monomial(0, 0, d / 2)});
    TriRegion T = buildRegion(I, d);
    for (auto _ : state) benchmark::DoNotOptimize(enumerateTilings(T).size());
}
BENCHMARK(BM_EnumerateTilings)->Arg(6)->Arg(8)->Arg(10);

static void BM_WlpReport(benchmark::State& state) {
    MonomialIdeal I = parseIdeal("x^7,y^7,z^7,x^3y^3z^3");
    for (auto _ : state) benchmark::DoNotOptimize(wlpReport(I).wlpQ);
}
BENCHMARK(BM_WlpReport);

static void BM_LargeDetZ(benchmark::State& state) {
    TriRegion T = buildRegion(parseIdeal("x^20,y^20,z^20,x^3y^8z^13"), 28);
    for (auto _ : state) benchmark::DoNotOptimize(detExact(zMatrix(T)));
}
BENCHMARK(BM_LargeDetZ);

static void BM_SplittingTypeOracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(splittingTypeOracle(7, 7, 7, 3, 3, 3).p);
}
BENCHMARK(BM_SplittingTypeOracle);

static void BM_Hilbert(benchmark::State& state) {
    MonomialIdeal I = parseIdeal("x^20,y^20,z^20,x^3y^8z^13");
    const long long j = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert(I, j));
}
BENCHMARK(BM_Hilbert)->Arg(20)->Arg(40)->Arg(1000000);

BENCHMARK_MAIN();
