#ifndef FLOORSET_EXACT_ARITH_HPP
#define FLOORSET_EXACT_ARITH_HPP

#include <cstdint>

#include "floorset/rational_exponent.hpp"

namespace floorset {

// a = (tX)^(1/(t+1)) is the index at which n -> floor(X / n^t)
// switches from strictly decreasing steps to steps in {0, 1}.
struct CriticalIndex {
    std::uint64_t floor_value = 0; // floor(a)
    bool is_integer = false;       // a itself integral, tested exactly
};

// floor(m^(1/r)): float guess, integer Newton, exact final check.
std::uint64_t int_nth_root(std::uint64_t m, std::uint32_t r);

// floor(X / n^t) for t = u/v, computed exactly: never through a
// double. Identity used: floor(X / n^(u/v)) = floor((floor(X^v / n^u))^(1/v)).
std::uint64_t floor_x_over_n_pow_t(std::uint64_t x, std::uint64_t n, RationalExponent t);

// floor(a) and integrality of a = (tX)^(1/(t+1)), via the exact
// predicate den^den * n^(num+den) <= num^den * X^den. Requires t > 1.
CriticalIndex critical_index(std::uint64_t x, RationalExponent t);

} // namespace floorset

#endif
