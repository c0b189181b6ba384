#ifndef FLOORSET_HYPERBOLIC_SETS_HPP
#define FLOORSET_HYPERBOLIC_SETS_HPP

#include <cstdint>
#include <vector>

#include "floorset/exact_arith.hpp"
#include "floorset/rational_exponent.hpp"

namespace floorset {

// Closed-form cardinality of S_t(X) = { floor(X / n^t) : 1 <= n <= X }.
struct CardinalityReport {
    std::uint64_t x = 0;
    RationalExponent t;
    std::uint64_t cardinality = 0;
    std::uint64_t floor_a = 0; // floor((tX)^(1/(t+1)))
    bool a_is_integer = false;
    int epsilon = 0;           // the 0/1 overlap correction
};

struct FloorSetElements {
    std::uint64_t x = 0;
    RationalExponent t;
    std::vector<std::uint64_t> elements; // sorted ascending, distinct
};

enum class EnumerationMode {
    Naive,     // evaluate all n in [1, X]
    EarlyStop, // head n <= floor(a) individually, tail is {0..floor(X/(floor(a)+1)^t)}
};

// Brute-force S_t(X). Accepts t >= 1 (t = 1 forces Naive internally).
FloorSetElements enumerate_s_t(std::uint64_t x, RationalExponent t,
                               EnumerationMode mode = EnumerationMode::EarlyStop);

// |S_t(X)| in O(polylog X), t > 1: floor_a + floor(X/(floor_a+1)^t) + epsilon,
// collapsing to floor_a + floor(X/floor_a^t) when a is an integer.
CardinalityReport card_s_t(std::uint64_t x, RationalExponent t);

// |S(X)| = floor(sqrt(4X+1)) - 1, the t = 1 closed form.
std::uint64_t card_s1(std::uint64_t x);

// |S(X)| by divisor-block jumps n -> floor(X/floor(X/n)) + 1.
std::uint64_t count_s1_by_blocks(std::uint64_t x);

// The elements of S(X) via the same jumps, sorted ascending.
std::vector<std::uint64_t> s1_elements_by_blocks(std::uint64_t x);

// First-order estimate X^(1/(t+1)) * (t^(1/(t+1)) + t^(-t/(t+1))).
double estimate_card_s_t(std::uint64_t x, RationalExponent t);

} // namespace floorset

#endif
