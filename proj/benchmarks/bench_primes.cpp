#include <benchmark/benchmark.h>

#include "floorset/prime_sets.hpp"

namespace {

void BM_Sieve(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(floorset::sieve(limit).primes.size());
}
BENCHMARK(BM_Sieve)->Range(100'000, 100'000'000)->Unit(benchmark::kMillisecond);

void BM_MillerRabin(benchmark::State& state) {
    std::uint64_t n = 18446744073709551557ull; // largest 64-bit prime
    for (auto _ : state) benchmark::DoNotOptimize(floorset::is_prime_u64(n));
}
BENCHMARK(BM_MillerRabin);

void BM_DistinctExponents(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    const auto table = floorset::sieve(x);
    for (auto _ : state)
        benchmark::DoNotOptimize(floorset::distinct_factorial_exponents(x, table).distinct_count);
}
BENCHMARK(BM_DistinctExponents)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_EnumerateSp(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    const auto table = floorset::sieve(x);
    for (auto _ : state) benchmark::DoNotOptimize(floorset::enumerate_s_p(x, table).size());
}
BENCHMARK(BM_EnumerateSp)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

} // namespace
