#include <benchmark/benchmark.h>

#include "floorset/general_sets.hpp"
#include "floorset/prime_density.hpp"

namespace {

void BM_SolveCriticalPoint(benchmark::State& state) {
    const auto spec = floorset::preset("circle", static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::solve_critical_point(spec));
}
BENCHMARK(BM_SolveCriticalPoint)->Arg(1'000'000);

void BM_AsymptoticFormula(benchmark::State& state) {
    const auto spec = floorset::preset("sqrt", static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::asymptotic_cardinality(spec).formula_value);
}
BENCHMARK(BM_AsymptoticFormula)->Arg(1'000'000);

void BM_ExactCount(benchmark::State& state) {
    const auto spec = floorset::preset("parabola", static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::count_s_f(spec));
}
BENCHMARK(BM_ExactCount)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_MaWuMainTerm(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::ma_wu_main_term(x));
}
BENCHMARK(BM_MaWuMainTerm)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_DensityReport(benchmark::State& state) {
    const auto t1 = floorset::RationalExponent::make(1, 1);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::density_report(x, t1).prime_count);
}
BENCHMARK(BM_DensityReport)->Range(1'000'000, 1'000'000'000)->Unit(benchmark::kMillisecond);

} // namespace
