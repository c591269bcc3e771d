#include <benchmark/benchmark.h>

#include "tdual/beilinson.hpp"
#include "tdual/cohomology_oracle.hpp"
#include "tdual/combinatorial_homs.hpp"
#include "tdual/lagrangian_branes.hpp"

namespace {

void BM_QuotientQuiver(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tdual::homs::quotient_quiver(n));
}
BENCHMARK(BM_QuotientQuiver)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyEquivalence(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tdual::beilinson::verify_equivalence(n));
}
BENCHMARK(BM_VerifyEquivalence)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_OracleHomDim(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int i = -static_cast<int>(n) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(tdual::oracle::oracle_hom_dim(i, -1, n, tdual::oracle::default_epsilon()));
}
BENCHMARK(BM_OracleHomDim)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SeparationProbe(benchmark::State& state) {
    tdual::branes::SeparationProbeConfig c;
    c.s = {0.0, 0.0};
    c.samples = 10000;
    for (auto _ : state) benchmark::DoNotOptimize(tdual::branes::separation_probe(2, c));
}
BENCHMARK(BM_SeparationProbe)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
