#include "floorset/exact_arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "detail_int128.hpp"

namespace floorset {

using detail::u128;
using detail::u64;
using bigint = boost::multiprecision::cpp_int;

namespace {

bigint int_nth_root_big(const bigint& m, std::uint32_t r) {
    if (r == 1 || m < 2) return m;
    const unsigned bits = static_cast<unsigned>(msb(m)) + 1;
    bigint x = bigint(1) << ((bits + r - 1) / r);
    while (true) {
        bigint y = ((r - 1) * x + m / pow(x, r - 1)) / r;
        if (y >= x) break;
        x = y;
    }
    while (pow(x, r) > m) --x;
    while (pow(x + 1, r) <= m) ++x;
    return x;
}

u64 parse_u64(std::string_view text) {
    u64 value = 0;
    if (text.empty()) throw std::invalid_argument("exponent: empty number");
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("exponent: malformed number");
    return value;
}

} // namespace

RationalExponent RationalExponent::make(u64 num, u64 den) {
    if (den == 0) throw std::invalid_argument("exponent: zero denominator");
    if (num == 0) throw std::invalid_argument("exponent: t must be >= 1");
    const u64 g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num < den) throw std::invalid_argument("exponent: t must be >= 1");
    return RationalExponent{num, den};
}

RationalExponent RationalExponent::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return make(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        // Finite decimals convert exactly; 18 digits is the most the
        // u64 numerator can absorb, anything longer is rejected
        // rather than rounded.
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (whole.empty() || frac.empty())
            throw std::invalid_argument("exponent: malformed decimal");
        if (whole.size() + frac.size() > 18)
            throw std::invalid_argument("exponent: decimal too long to convert exactly");
        u64 den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::string digits;
        digits.reserve(whole.size() + frac.size());
        digits.append(whole).append(frac);
        return make(parse_u64(digits), den);
    }
    return make(parse_u64(text), 1);
}

std::string RationalExponent::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

u64 int_nth_root(u64 m, std::uint32_t r) {
    if (r == 0) throw std::invalid_argument("int_nth_root: degree must be >= 1");
    if (r == 1 || m < 2) return m;
    if (r >= 64) return 1;
    // Floating guess overshot by a safe margin, then integer Newton
    // downward; the two correction loops make the result exact
    // regardless of how far the guess was.
    const double guess = std::pow(static_cast<double>(m), 1.0 / r);
    u128 x = static_cast<u128>(guess) + 2;
    while (true) {
        u128 xp = 1;
        bool big = false;
        for (std::uint32_t i = 0; i + 1 < r; ++i) {
            if (xp > m / x) { big = true; break; }
            xp *= x;
        }
        u128 q = big ? 0 : m / xp;
        u128 y = (u128(r - 1) * x + q) / r;
        if (y >= x) break;
        x = y;
    }
    while (x > 0 && !detail::pow_leq(x, r, m)) --x;
    while (detail::pow_leq(x + 1, r, m)) ++x;
    return static_cast<u64>(x);
}

u64 floor_x_over_n_pow_t(u64 x, u64 n, RationalExponent t) {
    if (x < 1) throw std::invalid_argument("floor_x_over_n_pow_t: X must be >= 1");
    if (n < 1) throw std::invalid_argument("floor_x_over_n_pow_t: n must be >= 1");
    if (t.den == 1) {
        const auto np = detail::pow_u128(n, t.num);
        if (!np || *np > x) return 0;
        return static_cast<u64>(x / *np);
    }
    const auto xv = detail::pow_u128(x, t.den);
    const auto nu = detail::pow_u128(n, t.num);
    if (xv) {
        if (!nu) return 0; // n^num > 2^128 > X^den
        return detail::int_nth_root_u128(*xv / *nu, static_cast<std::uint32_t>(t.den));
    }
    const bigint q = pow(bigint(x), static_cast<unsigned>(t.den)) /
                     pow(bigint(n), static_cast<unsigned>(t.num));
    return int_nth_root_big(q, static_cast<std::uint32_t>(t.den)).convert_to<u64>();
}

CriticalIndex critical_index(u64 x, RationalExponent t) {
    if (x < 1) throw std::invalid_argument("critical_index: X must be >= 1");
    if (!t.greater_than_one()) throw std::invalid_argument("critical_index requires t > 1");
    const u64 u = t.num, v = t.den;

    // P(n): v^v * n^(u+v) <= u^v * x^v, i.e. n <= (tX)^(1/(t+1)).
    std::optional<u128> rhs128;
    if (const auto uv = detail::pow_u128(u, v)) {
        if (const auto xvp = detail::pow_u128(x, v)) {
            if (*uv == 0 || *xvp <= detail::kU128Max / *uv) rhs128 = *uv * *xvp;
        }
    }
    bigint rhs_big;
    if (!rhs128) rhs_big = pow(bigint(u), static_cast<unsigned>(v)) * pow(bigint(x), static_cast<unsigned>(v));

    const auto pred = [&](u64 n) -> bool {
        if (rhs128) {
            const auto vv = detail::pow_u128(v, v);
            if (!vv) return false;
            const auto nn = detail::pow_u128(n, u + v);
            if (!nn) return false;
            if (*vv != 0 && *nn > detail::kU128Max / *vv) return false;
            return *vv * *nn <= *rhs128;
        }
        return pow(bigint(v), static_cast<unsigned>(v)) * pow(bigint(n), static_cast<unsigned>(u + v)) <= rhs_big;
    };

    u64 floor_a;
    if (pred(x)) {
        floor_a = x; // only happens at X = 1
    } else {
        u64 lo = 1, hi = x; // pred(lo) holds, pred(hi) fails
        while (hi - lo > 1) {
            const u64 mid = lo + (hi - lo) / 2;
            (pred(mid) ? lo : hi) = mid;
        }
        floor_a = lo;
    }

    const bool integral =
        pow(bigint(v), static_cast<unsigned>(v)) * pow(bigint(floor_a), static_cast<unsigned>(u + v)) ==
        pow(bigint(u), static_cast<unsigned>(v)) * pow(bigint(x), static_cast<unsigned>(v));
    return CriticalIndex{floor_a, integral};
}

} // namespace floorset
