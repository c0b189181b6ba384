#include "floorset/hyperbolic_sets.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail_int128.hpp"

namespace floorset {

using detail::u128;
using detail::u64;

FloorSetElements enumerate_s_t(u64 x, RationalExponent t, EnumerationMode mode) {
    if (x < 1) throw std::invalid_argument("enumerate_s_t: X must be >= 1");
    FloorSetElements out;
    out.x = x;
    out.t = t;
    if (t.is_one()) {
        if (mode == EnumerationMode::EarlyStop) {
            out.elements = s1_elements_by_blocks(x);
            return out;
        }
        out.elements.reserve(static_cast<std::size_t>(2 * std::sqrt(static_cast<double>(x))) + 2);
        for (u64 n = 1; n <= x; ++n) out.elements.push_back(x / n);
        std::sort(out.elements.begin(), out.elements.end());
        out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
        return out;
    }

    if (mode == EnumerationMode::Naive) {
        std::vector<u64> vals;
        vals.reserve(x < 4096 ? x : 4096);
        for (u64 n = 1; n <= x; ++n) vals.push_back(floor_x_over_n_pow_t(x, n, t));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        out.elements = std::move(vals);
        return out;
    }

    // Early stop: walk the head n <= floor(a), where consecutive
    // values drop by more than the tail ever steps; past the critical
    // index the values X/n^t move in steps of 0 or 1 down to 0, so the
    // tail is exactly the interval [0, X/(floor(a)+1)^t].
    const CriticalIndex ci = critical_index(x, t);
    const u64 n0 = ci.floor_value;
    if (n0 >= x) {
        out.elements = {1}; // X = 1
        return out;
    }
    std::vector<u64> head;
    head.reserve(n0);
    for (u64 n = 1; n <= n0; ++n) head.push_back(floor_x_over_n_pow_t(x, n, t));
    const u64 tail_top = floor_x_over_n_pow_t(x, n0 + 1, t);

    out.elements.reserve(static_cast<std::size_t>(tail_top) + 1 + head.size());
    for (u64 v = 0; v <= tail_top; ++v) out.elements.push_back(v);
    for (std::size_t i = head.size(); i-- > 0;) {
        if (head[i] > tail_top) out.elements.push_back(head[i]);
    }
    return out;
}

CardinalityReport card_s_t(u64 x, RationalExponent t) {
    if (x < 1) throw std::invalid_argument("card_s_t: X must be >= 1");
    if (!t.greater_than_one()) throw std::invalid_argument("card_s_t requires t > 1");
    CardinalityReport report;
    report.x = x;
    report.t = t;
    if (x == 1) {
        // a = t^(1/(t+1)) lies in (1, 2) but exceeds X, so there is no
        // tail; the set is just { floor(1/1) } = {1}.
        report.cardinality = 1;
        report.floor_a = 1;
        report.a_is_integer = false;
        report.epsilon = 0;
        return report;
    }
    const CriticalIndex ci = critical_index(x, t);
    report.floor_a = ci.floor_value;
    report.a_is_integer = ci.is_integer;
    if (ci.is_integer) {
        report.epsilon = 0;
        report.cardinality = ci.floor_value + floor_x_over_n_pow_t(x, ci.floor_value, t);
        return report;
    }
    const u64 k1 = floor_x_over_n_pow_t(x, ci.floor_value + 1, t);
    const u64 k = floor_x_over_n_pow_t(x, ci.floor_value, t);
    // epsilon = 0 iff the head value at floor(a) reappears as the top
    // of the tail: k * (floor(a)+1)^t <= X, tested as
    // k^den * (floor(a)+1)^num <= X^den in exact arithmetic.
    bool overlap;
    if (k == 0) {
        overlap = true;
    } else if (const auto xd = detail::pow_u128(x, t.den)) {
        const auto kd = detail::pow_u128(k, t.den);
        const auto nu = detail::pow_u128(ci.floor_value + 1, t.num);
        // A left-side factor past 128 bits can only exceed X^den;
        // otherwise kd*nu <= xd iff nu <= floor(xd/kd).
        overlap = kd && nu && *nu <= *xd / *kd;
    } else {
        using bigint = boost::multiprecision::cpp_int;
        overlap = pow(bigint(k), static_cast<unsigned>(t.den)) *
                          pow(bigint(ci.floor_value + 1), static_cast<unsigned>(t.num)) <=
                  pow(bigint(x), static_cast<unsigned>(t.den));
    }
    report.epsilon = overlap ? 0 : 1;
    report.cardinality = ci.floor_value + k1 + report.epsilon;
    return report;
}

u64 card_s1(u64 x) {
    if (x < 1) throw std::invalid_argument("card_s1: X must be >= 1");
    const u128 m = static_cast<u128>(x) * 4 + 1;
    return detail::int_nth_root_u128(m, 2) - 1;
}

u64 count_s1_by_blocks(u64 x) {
    if (x < 1) throw std::invalid_argument("count_s1_by_blocks: X must be >= 1");
    u64 count = 0;
    u64 n = 1;
    while (n <= x) {
        const u64 q = x / n;
        ++count;
        n = x / q + 1;
    }
    return count;
}

std::vector<u64> s1_elements_by_blocks(u64 x) {
    if (x < 1) throw std::invalid_argument("s1_elements_by_blocks: X must be >= 1");
    std::vector<u64> values;
    u64 n = 1;
    while (n <= x) {
        const u64 q = x / n;
        values.push_back(q);
        n = x / q + 1;
    }
    std::reverse(values.begin(), values.end());
    return values;
}

double estimate_card_s_t(u64 x, RationalExponent t) {
    // a + X/a^t at a = (tX)^(1/(t+1)), i.e.
    // X^(1/(t+1)) * (t^(1/(t+1)) + t^(-t/(t+1))).
    const double td = t.to_double();
    const double e = 1.0 / (td + 1.0);
    return std::pow(static_cast<double>(x), e) * (std::pow(td, e) + std::pow(td, -td * e));
}

} // namespace floorset
