#ifndef FLOORSET_PRIME_DENSITY_HPP
#define FLOORSET_PRIME_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "floorset/rational_exponent.hpp"

namespace floorset {

// Prime statistics of S_t(X): how close the set sits to the
// "primes thin out like 1/log" regime.
struct DensityReport {
    std::uint64_t x = 0;
    RationalExponent t;
    std::uint64_t prime_count = 0;
    std::uint64_t set_size = 0;
    double pnt_ratio = 0; // prime_count * ln(set_size) / set_size
    std::optional<double> hey_estimate;    // 4 sqrt(X)/ln X, t = 1 only
    std::optional<double> ma_wu_main_term; // t = 1 and X >= 16 only
};

// Number of primes among the elements (Miller-Rabin per element).
std::uint64_t count_primes_in_set(std::span<const std::uint64_t> elements);

// Integral_2^sqrt(X) dt/ln t + Integral_2^sqrt(X) dt/ln(X/t), each by
// adaptive Simpson to 1e-8 relative. Requires X >= 16.
double ma_wu_main_term(std::uint64_t x);

// Builds S_t(X) (divisor blocks for t = 1, early-stop enumeration for
// t > 1), counts primes, fills the ratios.
DensityReport density_report(std::uint64_t x, RationalExponent t,
                             std::uint64_t cap = 10'000'000'000ull);

} // namespace floorset

#endif
