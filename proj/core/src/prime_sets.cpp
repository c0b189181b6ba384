#include "floorset/prime_sets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "detail_int128.hpp"
#include "floorset/exact_arith.hpp"

namespace floorset {

using detail::u128;
using detail::u64;

PrimeTable sieve(u64 limit) {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
    const u64 root = int_nth_root(limit, 2);

    std::vector<char> base(root + 1, 1);
    base[0] = 0;
    if (root >= 1) base[1] = 0;
    for (u64 i = 2; i * i <= root; ++i) {
        if (!base[i]) continue;
        for (u64 j = i * i; j <= root; j += i) base[j] = 0;
    }
    std::vector<u64> base_primes;
    for (u64 i = 2; i <= root; ++i) {
        if (base[i]) base_primes.push_back(i);
    }

    PrimeTable table;
    table.limit = limit;
    const double dl = static_cast<double>(limit);
    table.primes.reserve(static_cast<std::size_t>(dl / std::max(1.0, std::log(dl) - 1.2)) + 16);

    const u64 seg_size = std::max<u64>(root, u64(1) << 16);
    std::vector<char> seg;
    for (u64 low = 2; low <= limit; low += seg_size) {
        const u64 high = std::min(limit, low + seg_size - 1);
        seg.assign(static_cast<std::size_t>(high - low + 1), 1);
        for (const u64 p : base_primes) {
            if (p * p > high) break;
            u64 start = ((low + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (u64 j = start; j <= high; j += p) seg[static_cast<std::size_t>(j - low)] = 0;
        }
        for (u64 i = low; i <= high; ++i) {
            if (seg[static_cast<std::size_t>(i - low)]) table.primes.push_back(i);
        }
        if (high == limit) break; // low + seg_size may wrap past u64 range otherwise
    }
    return table;
}

namespace {

constexpr char kCacheMagic[8] = {'F', 'S', 'K', 'S', 'I', 'E', 'V', 'E'};

u64 bit_bytes(u64 limit) { return (limit + 1 + 7) / 8; }

} // namespace

bool save_sieve_cache(const std::string& path, const PrimeTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(kCacheMagic, sizeof kCacheMagic);
    char lim[8];
    for (int i = 0; i < 8; ++i) lim[i] = static_cast<char>((table.limit >> (8 * i)) & 0xff);
    out.write(lim, 8);
    std::vector<unsigned char> bits(static_cast<std::size_t>(bit_bytes(table.limit)), 0);
    for (const u64 p : table.primes) {
        bits[static_cast<std::size_t>(p / 8)] |= static_cast<unsigned char>(1u << (p % 8));
    }
    out.write(reinterpret_cast<const char*>(bits.data()), static_cast<std::streamsize>(bits.size()));
    return static_cast<bool>(out);
}

std::optional<PrimeTable> load_sieve_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kCacheMagic)) return std::nullopt;
    char lim[8];
    if (!in.read(lim, 8)) return std::nullopt;
    u64 limit = 0;
    for (int i = 0; i < 8; ++i) limit |= static_cast<u64>(static_cast<unsigned char>(lim[i])) << (8 * i);
    if (limit < 2) return std::nullopt;
    std::vector<unsigned char> bits(static_cast<std::size_t>(bit_bytes(limit)));
    if (!in.read(reinterpret_cast<char*>(bits.data()), static_cast<std::streamsize>(bits.size())))
        return std::nullopt;
    if (in.peek() != std::ifstream::traits_type::eof()) return std::nullopt; // trailing junk
    PrimeTable table;
    table.limit = limit;
    for (u64 n = 2; n <= limit; ++n) {
        if (bits[static_cast<std::size_t>(n / 8)] & (1u << (n % 8))) table.primes.push_back(n);
    }
    return table;
}

PrimeTable sieve_cached(u64 limit, const std::string& cache_path) {
    if (limit < 2) throw std::invalid_argument("sieve_cached: limit must be >= 2");
    if (auto cached = load_sieve_cache(cache_path)) {
        if (cached->limit >= limit) return std::move(*cached);
    }
    PrimeTable table = sieve(limit);
    if (!save_sieve_cache(cache_path, table)) {
        std::fprintf(stderr, "floorset: could not write sieve cache %s\n", cache_path.c_str());
    }
    return table;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (const u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sinclair's 7-base set, deterministic for all n < 2^64.
    for (const u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 legendre_valuation(u64 x, u64 p) {
    if (p > x) throw std::invalid_argument("legendre_valuation: p must be <= X");
    if (!is_prime_u64(p)) throw std::invalid_argument("legendre_valuation: p must be prime");
    u64 acc = 0;
    u64 q = p;
    while (true) {
        acc += x / q;
        if (q > x / p) break; // q*p would exceed X
        q *= p;
    }
    return acc;
}

std::vector<u64> enumerate_s_p(u64 x, const PrimeTable& table) {
    if (x < 2) throw std::invalid_argument("enumerate_s_p: X must be >= 2");
    if (table.limit < x) throw std::invalid_argument("enumerate_s_p: prime table too small");
    std::vector<u64> values; // x/p is non-increasing in p: dedupe adjacent, then reverse
    for (const u64 p : table.primes) {
        if (p > x) break;
        const u64 v = x / p;
        if (values.empty() || values.back() != v) values.push_back(v);
    }
    std::reverse(values.begin(), values.end());
    return values;
}

std::vector<u64> enumerate_s_p(u64 x) {
    const PrimeTable table = sieve(x);
    return enumerate_s_p(x, table);
}

ValuationProfile distinct_factorial_exponents(u64 x, const PrimeTable& table) {
    if (x < 2) throw std::invalid_argument("distinct_factorial_exponents: X must be >= 2");
    if (table.limit < x) throw std::invalid_argument("distinct_factorial_exponents: prime table too small");
    ValuationProfile profile;
    profile.x = x;
    u64 distinct = 0;
    u64 prev = 0;
    bool first = true;
    for (const u64 p : table.primes) {
        if (p > x) break;
        // Above the square root the Legendre sum is its first term.
        const u64 v = (p <= x / p) ? legendre_valuation(x, p) : x / p;
        profile.exponents.push_back(PrimeValuation{p, v});
        // v_p is non-increasing in p, so distinct values are adjacent.
        if (first || v != prev) ++distinct;
        prev = v;
        first = false;
    }
    profile.distinct_count = distinct;
    return profile;
}

ValuationProfile distinct_factorial_exponents(u64 x) {
    const PrimeTable table = sieve(x);
    return distinct_factorial_exponents(x, table);
}

double growth_ratio(u64 x, const PrimeTable& table) {
    if (x < 2) throw std::invalid_argument("growth_ratio: X must be >= 2");
    const auto values = enumerate_s_p(x, table);
    const double dx = static_cast<double>(x);
    return static_cast<double>(values.size()) / std::sqrt(dx / std::log(dx));
}

double growth_ratio(u64 x) {
    const PrimeTable table = sieve(x);
    return growth_ratio(x, table);
}

} // namespace floorset
