#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "floorset/exact_arith.hpp"
#include "floorset/rational_exponent.hpp"

using floorset::CriticalIndex;
using floorset::RationalExponent;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

TEST_CASE("rational exponent parsing") {
    CHECK(RationalExponent::parse("2") == RationalExponent::make(2, 1));
    CHECK(RationalExponent::parse("3/2") == RationalExponent::make(3, 2));
    CHECK(RationalExponent::parse("6/4") == RationalExponent::make(3, 2));
    CHECK(RationalExponent::parse("1.5") == RationalExponent::make(3, 2));
    CHECK(RationalExponent::parse("2.50") == RationalExponent::make(5, 2));
    CHECK(RationalExponent::parse("1.0").is_one());
    CHECK(RationalExponent::parse("1").is_one());
    CHECK(RationalExponent::parse("7/3").str() == "7/3");
    CHECK(RationalExponent::parse("4").str() == "4");

    CHECK_THROWS_AS(RationalExponent::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("1/2"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse(".5"), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("2."), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(RationalExponent::parse("1.000000000000000001"), std::invalid_argument);
}

TEST_CASE("integer nth root") {
    CHECK(floorset::int_nth_root(0, 2) == 0);
    CHECK(floorset::int_nth_root(1, 5) == 1);
    CHECK(floorset::int_nth_root(63, 2) == 7);
    CHECK(floorset::int_nth_root(64, 2) == 8);
    CHECK(floorset::int_nth_root(65, 2) == 8);
    CHECK(floorset::int_nth_root(26, 3) == 2);
    CHECK(floorset::int_nth_root(27, 3) == 3);
    CHECK(floorset::int_nth_root(7, 1) == 7);
    CHECK(floorset::int_nth_root(UINT64_MAX, 2) == 4294967295ull);
    CHECK(floorset::int_nth_root(UINT64_MAX, 3) == 2642245ull);
    CHECK(floorset::int_nth_root(UINT64_MAX, 63) == 2);
    CHECK(floorset::int_nth_root(UINT64_MAX, 64) == 1);
    CHECK_THROWS_AS(floorset::int_nth_root(5, 0), std::invalid_argument);

    for (u64 m = 0; m <= 2000; ++m)
        for (std::uint32_t r = 2; r <= 6; ++r) {
            const u64 v = floorset::int_nth_root(m, r);
            u64 pow_v = 1, pow_v1 = 1;
            for (std::uint32_t i = 0; i < r; ++i) {
                pow_v *= v;
                pow_v1 *= v + 1;
            }
            CHECK(pow_v <= m);
            CHECK(pow_v1 > m);
        }
}

TEST_CASE("floor of X over n^t") {
    CHECK(floorset::floor_x_over_n_pow_t(100, 3, RationalExponent::make(2, 1)) == 11);
    CHECK(floorset::floor_x_over_n_pow_t(100, 3, RationalExponent::make(3, 2)) == 19);
    CHECK(floorset::floor_x_over_n_pow_t(100, 1, RationalExponent::make(7, 3)) == 100);
    CHECK(floorset::floor_x_over_n_pow_t(7, 2, RationalExponent::make(3, 1)) == 0);
    CHECK(floorset::floor_x_over_n_pow_t(1, 1, RationalExponent::make(2, 1)) == 1);
    CHECK_THROWS_AS(floorset::floor_x_over_n_pow_t(0, 1, RationalExponent::make(2, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(floorset::floor_x_over_n_pow_t(1, 0, RationalExponent::make(2, 1)),
                    std::invalid_argument);

    // Integer exponents against plain integer arithmetic.
    for (u64 x : {17ull, 100ull, 999ull, 40000ull, 123456789ull})
        for (u64 n = 1; n <= 60; ++n) {
            CHECK(floorset::floor_x_over_n_pow_t(x, n, RationalExponent::make(2, 1)) ==
                  x / (n * n));
            CHECK(floorset::floor_x_over_n_pow_t(x, n, RationalExponent::make(3, 1)) ==
                  x / (n * n * n));
        }

    // Defining inequality v^den * n^num <= x^den < (v+1)^den * n^num,
    // checked in 128-bit arithmetic on a random sample.
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<u64> xs(1, 1'000'000'000);
    std::uniform_int_distribution<u64> ns(1, 1000);
    for (const auto& t :
         {RationalExponent::make(2, 1), RationalExponent::make(3, 1), RationalExponent::make(3, 2)})
        for (int i = 0; i < 2000; ++i) {
            const u64 x = xs(rng), n = ns(rng);
            const u64 v = floorset::floor_x_over_n_pow_t(x, n, t);
            u128 xd = 1, nu = 1, vd = 1, v1d = 1;
            for (u64 k = 0; k < t.den; ++k) {
                xd *= x;
                vd *= v;
                v1d *= v + 1;
            }
            for (u64 k = 0; k < t.num; ++k) nu *= n;
            CHECK(vd * nu <= xd);
            CHECK(v1d * nu > xd);
        }
}

TEST_CASE("critical index") {
    const auto t2 = RationalExponent::make(2, 1);
    const auto ci100 = floorset::critical_index(100, t2);
    CHECK(ci100.floor_value == 5); // (200)^(1/3) = 5.848...
    CHECK_FALSE(ci100.is_integer);

    const auto ci4 = floorset::critical_index(4, t2);
    CHECK(ci4.floor_value == 2); // (8)^(1/3) = 2 exactly
    CHECK(ci4.is_integer);

    const auto ci162 = floorset::critical_index(162, RationalExponent::make(3, 2));
    CHECK(ci162.floor_value == 9); // (243)^(2/5) = 9 exactly
    CHECK(ci162.is_integer);

    const auto ci1 = floorset::critical_index(1, RationalExponent::make(7, 3));
    CHECK(ci1.floor_value == 1); // t^(1/(t+1)) is in (1, 2)
    CHECK_FALSE(ci1.is_integer);

    CHECK_THROWS_AS(floorset::critical_index(10, RationalExponent::make(1, 1)),
                    std::invalid_argument);

    // floor(a) satisfies the defining predicate and floor(a)+1 does not.
    for (const auto& t : {RationalExponent::make(2, 1), RationalExponent::make(3, 1),
                          RationalExponent::make(4, 1), RationalExponent::make(3, 2),
                          RationalExponent::make(5, 2), RationalExponent::make(7, 3)})
        for (u64 x = 1; x <= 5000; ++x) {
            const auto ci = floorset::critical_index(x, t);
            const u64 u = t.num, v = t.den;
            const auto holds = [&](u64 n) {
                u128 lhs = 1, rhs = 1;
                for (u64 k = 0; k < v; ++k) {
                    lhs *= v;
                    rhs *= u;
                }
                for (u64 k = 0; k < u + v; ++k) lhs *= n;
                for (u64 k = 0; k < v; ++k) rhs *= x;
                return lhs <= rhs;
            };
            CHECK(holds(ci.floor_value));
            CHECK_FALSE(holds(ci.floor_value + 1));
        }
}
