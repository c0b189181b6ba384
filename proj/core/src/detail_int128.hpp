#ifndef FLOORSET_DETAIL_INT128_HPP
#define FLOORSET_DETAIL_INT128_HPP

// Internal 128-bit helpers shared by the exact kernel and the preset
// floor paths. Not installed.

#include <cstdint>
#include <optional>

namespace floorset::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

// base^exp, or nullopt past 128 bits. Square and multiply.
inline std::optional<u128> pow_u128(u128 base, u64 exp) {
    u128 result = 1;
    u128 b = base;
    while (true) {
        if (exp & 1) {
            if (b != 0 && result > kU128Max / b) return std::nullopt;
            result *= b;
        }
        exp >>= 1;
        if (exp == 0) break;
        if (b != 0 && b > kU128Max / b) return std::nullopt;
        b *= b;
    }
    return result;
}

// base^exp <= bound without ever overflowing.
inline bool pow_leq(u128 base, u64 exp, u128 bound) {
    u128 acc = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && acc > bound / base) return false;
        acc *= base;
    }
    return acc <= bound;
}

inline int bit_width_u128(u128 v) {
    int bits = 0;
    while (v > 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

// floor(m^(1/r)) for r >= 2 (also r = 1 when m fits u64). Newton from
// a provable upper bound, exact final check.
inline u64 int_nth_root_u128(u128 m, std::uint32_t r) {
    if (r == 1) return static_cast<u64>(m);
    if (m < 2) return static_cast<u64>(m);
    if (r >= 128) return 1;
    int bits = bit_width_u128(m);
    u128 x = u128(1) << ((bits + r - 1) / r); // x^r >= 2^bits > m
    while (true) {
        u128 xp = 1;
        bool big = false;
        for (std::uint32_t i = 0; i + 1 < r; ++i) {
            if (xp > m / x) { big = true; break; } // x^(r-1) > m, quotient is 0
            xp *= x;
        }
        u128 q = big ? 0 : m / xp;
        u128 y = (u128(r - 1) * x + q) / r;
        if (y >= x) break;
        x = y;
    }
    while (x > 0 && !pow_leq(x, r, m)) --x;
    while (pow_leq(x + 1, r, m)) ++x;
    return static_cast<u64>(x);
}

} // namespace floorset::detail

#endif
