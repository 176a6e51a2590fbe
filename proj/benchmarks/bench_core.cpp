#include <benchmark/benchmark.h>

#include "symq/basis.hpp"

using namespace symq;

static void BM_SolidHarmonicProduct(benchmark::State& state) {
    const auto& a = solid_harmonic(4, 1);
    const auto& b = solid_harmonic(4, -1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SolidHarmonicProduct);

static void BM_ExpandSym(benchmark::State& state) {
    auto p = solid_harmonic(4, 2) * solid_harmonic(4, -2);
    for (auto _ : state) benchmark::DoNotOptimize(expand_sym(p));
}
BENCHMARK(BM_ExpandSym);

BENCHMARK_MAIN();
