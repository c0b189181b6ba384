#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "floorset/prime_sets.hpp"

using u64 = std::uint64_t;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const char* name) {
        path = std::string("floorset_test_") + name + "_" + std::to_string(::getpid()) + ".bin";
    }
    ~TempPath() { std::remove(path.c_str()); }
};

std::vector<u64> trial_primes(u64 limit) {
    std::vector<u64> out;
    for (u64 n = 2; n <= limit; ++n) {
        bool prime = true;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

} // namespace

TEST_CASE("segmented sieve") {
    CHECK_THROWS_AS(floorset::sieve(0), std::invalid_argument);
    CHECK_THROWS_AS(floorset::sieve(1), std::invalid_argument);
    CHECK(floorset::sieve(2).primes == std::vector<u64>{2});
    CHECK(floorset::sieve(30).primes == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});

    CHECK(floorset::sieve(10).primes.size() == 4);
    CHECK(floorset::sieve(100).primes.size() == 25);
    CHECK(floorset::sieve(1000).primes.size() == 168);
    CHECK(floorset::sieve(10000).primes.size() == 1229);
    CHECK(floorset::sieve(1'000'000).primes.size() == 78498);

    // Boundary behavior around segment edges and perfect squares.
    for (u64 limit : {7ull, 49ull, 121ull, 127ull, 128ull, 129ull, 5000ull})
        CHECK(floorset::sieve(limit).primes == trial_primes(limit));
}

TEST_CASE("sieve cache") {
    TempPath tmp("sieve_cache");
    const auto table = floorset::sieve(10000);
    REQUIRE(floorset::save_sieve_cache(tmp.path, table));

    const auto loaded = floorset::load_sieve_cache(tmp.path);
    REQUIRE(loaded.has_value());
    CHECK(loaded->limit == 10000);
    CHECK(loaded->primes == table.primes);

    SUBCASE("reused when large enough, regenerated when too small") {
        const auto small = floorset::sieve_cached(1000, tmp.path);
        CHECK(small.limit == 10000); // cache already covers the request
        CHECK(small.primes == table.primes);

        const auto big = floorset::sieve_cached(20000, tmp.path);
        CHECK(big.limit == 20000);
        CHECK(big.primes.size() == 2262);
        const auto reloaded = floorset::load_sieve_cache(tmp.path);
        REQUIRE(reloaded.has_value());
        CHECK(reloaded->limit == 20000); // regeneration rewrote the file
    }

    SUBCASE("corrupt files are rejected") {
        {
            std::ofstream out(tmp.path, std::ios::binary | std::ios::app);
            out.put('\0'); // trailing junk
        }
        CHECK_FALSE(floorset::load_sieve_cache(tmp.path).has_value());

        {
            std::ofstream out(tmp.path, std::ios::binary | std::ios::trunc);
            out << "NOTMAGIC" << std::string(16, '\0');
        }
        CHECK_FALSE(floorset::load_sieve_cache(tmp.path).has_value());

        CHECK_FALSE(floorset::load_sieve_cache("no_such_file_here.bin").has_value());

        // sieve_cached falls back to a fresh sieve on a corrupt cache.
        const auto fresh = floorset::sieve_cached(100, tmp.path);
        CHECK(fresh.primes.size() == 25);
    }
}

TEST_CASE("64-bit primality") {
    CHECK_FALSE(floorset::is_prime_u64(0));
    CHECK_FALSE(floorset::is_prime_u64(1));
    CHECK(floorset::is_prime_u64(2));
    CHECK(floorset::is_prime_u64(3));
    CHECK_FALSE(floorset::is_prime_u64(4));
    CHECK(floorset::is_prime_u64(37));
    CHECK_FALSE(floorset::is_prime_u64(561));              // Carmichael
    CHECK_FALSE(floorset::is_prime_u64(3215031751ull));    // strong pseudoprime to bases 2,3,5,7
    CHECK(floorset::is_prime_u64((1ull << 61) - 1));       // Mersenne
    CHECK(floorset::is_prime_u64(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(floorset::is_prime_u64(18446744073709551556ull));

    const auto table = floorset::sieve(20000);
    std::set<u64> prime_set(table.primes.begin(), table.primes.end());
    for (u64 n = 0; n <= 20000; ++n) CHECK(floorset::is_prime_u64(n) == prime_set.contains(n));
}

TEST_CASE("factorial valuations") {
    CHECK(floorset::legendre_valuation(10, 2) == 8);
    CHECK(floorset::legendre_valuation(4, 2) == 3);
    CHECK(floorset::legendre_valuation(100, 5) == 24);
    CHECK(floorset::legendre_valuation(100, 7) == 16);
    CHECK(floorset::legendre_valuation(100, 97) == 1);
    CHECK(floorset::legendre_valuation(2, 2) == 1);
    CHECK_THROWS_AS(floorset::legendre_valuation(10, 11), std::invalid_argument);
    CHECK_THROWS_AS(floorset::legendre_valuation(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(floorset::legendre_valuation(10, 1), std::invalid_argument);

    // v_p(X!) = v_p((X-1)!) + v_p(X), built up incrementally.
    for (u64 p : {2ull, 3ull, 5ull, 13ull}) {
        u64 acc = 0;
        for (u64 x = p; x <= 3000; ++x) {
            u64 m = x;
            while (m % p == 0) {
                ++acc;
                m /= p;
            }
            CHECK(floorset::legendre_valuation(x, p) == acc);
        }
    }
}

TEST_CASE("prime quotient sets") {
    CHECK(floorset::enumerate_s_p(10) == std::vector<u64>{1, 2, 3, 5});
    CHECK(floorset::enumerate_s_p(2) == std::vector<u64>{1});
    CHECK_THROWS_AS(floorset::enumerate_s_p(1), std::invalid_argument);

    const auto table = floorset::sieve(5000);
    for (u64 x = 2; x <= 5000; ++x) {
        std::set<u64> brute;
        for (u64 p : table.primes) {
            if (p > x) break;
            brute.insert(x / p);
        }
        const auto got = floorset::enumerate_s_p(x, table);
        CHECK(got == std::vector<u64>(brute.begin(), brute.end()));
    }
}

TEST_CASE("distinct factorial exponents") {
    const auto prof10 = floorset::distinct_factorial_exponents(10);
    REQUIRE(prof10.exponents.size() == 4);
    CHECK(prof10.exponents[0].prime == 2);
    CHECK(prof10.exponents[0].exponent == 8);
    CHECK(prof10.exponents[1].exponent == 4); // v_3(10!)
    CHECK(prof10.exponents[2].exponent == 2); // v_5(10!)
    CHECK(prof10.exponents[3].exponent == 1); // v_7(10!)
    CHECK(prof10.distinct_count == 4);

    // |alpha(X!)| = |S_p(X)|: above the square-root split the exponent is
    // exactly floor(X/p), and the deeper exponents never collide with those.
    const auto table = floorset::sieve(4000);
    for (u64 x = 2; x <= 4000; ++x) {
        const auto prof = floorset::distinct_factorial_exponents(x, table);
        CHECK(prof.distinct_count == floorset::enumerate_s_p(x, table).size());
        std::set<u64> direct;
        for (const auto& pv : prof.exponents) direct.insert(pv.exponent);
        CHECK(prof.distinct_count == direct.size());
    }
}

TEST_CASE("growth ratio") {
    const double r1000 = floorset::growth_ratio(1000);
    CHECK(r1000 == doctest::Approx(2.57649).epsilon(1e-4));
    for (u64 x : {1000ull, 10000ull, 100000ull}) {
        const double r = floorset::growth_ratio(x);
        CHECK(r > 2.0);
        CHECK(r < 3.0);
    }
}
