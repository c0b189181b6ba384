#include <benchmark/benchmark.h>

#include "floorset/hyperbolic_sets.hpp"

using floorset::RationalExponent;

namespace {

void BM_CardClosedForm(benchmark::State& state) {
    const auto t = RationalExponent::make(static_cast<std::uint64_t>(state.range(1)), 1);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::card_s_t(x, t).cardinality);
}
BENCHMARK(BM_CardClosedForm)
    ->ArgsProduct({{10'000, 1'000'000, 1'000'000'000, 1'000'000'000'000}, {2, 3}});

void BM_CardFractionalExponent(benchmark::State& state) {
    const auto t = RationalExponent::make(3, 2);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::card_s_t(x, t).cardinality);
}
BENCHMARK(BM_CardFractionalExponent)->Arg(1'000'000)->Arg(1'000'000'000'000);

void BM_EnumerateEarlyStop(benchmark::State& state) {
    const auto t = RationalExponent::make(2, 1);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            floorset::enumerate_s_t(x, t, floorset::EnumerationMode::EarlyStop).elements.size());
}
BENCHMARK(BM_EnumerateEarlyStop)->Range(1'000, 100'000'000);

void BM_EnumerateNaive(benchmark::State& state) {
    const auto t = RationalExponent::make(2, 1);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            floorset::enumerate_s_t(x, t, floorset::EnumerationMode::Naive).elements.size());
}
BENCHMARK(BM_EnumerateNaive)->Range(1'000, 1'000'000);

void BM_DivisorBlocks(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::count_s1_by_blocks(x));
}
BENCHMARK(BM_DivisorBlocks)->Range(1'000'000, 1'000'000'000'000);

void BM_DivisorClosedForm(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::card_s1(x));
}
BENCHMARK(BM_DivisorClosedForm)->Arg(1'000'000'000'000);

} // namespace
