#ifndef FLOORSET_PRIME_SETS_HPP
#define FLOORSET_PRIME_SETS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace floorset {

struct PrimeTable {
    std::uint64_t limit = 0;           // primality known for all n <= limit
    std::vector<std::uint64_t> primes; // ascending
};

// Segmented sieve of Eratosthenes, O(sqrt(limit) + segment) memory.
// Requires limit >= 2.
PrimeTable sieve(std::uint64_t limit);

// Binary sieve cache: "FSKSIEVE" magic, little-endian u64 limit,
// then one bit per integer 0..limit. A cache whose stored limit is
// below the request (or whose header is wrong) is regenerated.
bool save_sieve_cache(const std::string& path, const PrimeTable& table);
std::optional<PrimeTable> load_sieve_cache(const std::string& path);
PrimeTable sieve_cached(std::uint64_t limit, const std::string& cache_path);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime_u64(std::uint64_t n);

// v_p(X!) = sum_{k>=1} floor(X/p^k). Rejects composite p and p > X.
std::uint64_t legendre_valuation(std::uint64_t x, std::uint64_t p);

// S_p(X) = { floor(X/p) : p <= X prime }, sorted ascending, distinct.
// Requires X >= 2 (below that the set is empty by construction).
std::vector<std::uint64_t> enumerate_s_p(std::uint64_t x, const PrimeTable& table);
std::vector<std::uint64_t> enumerate_s_p(std::uint64_t x);

struct PrimeValuation {
    std::uint64_t prime = 0;
    std::uint64_t exponent = 0; // v_p(X!)
};

struct ValuationProfile {
    std::uint64_t x = 0;
    std::vector<PrimeValuation> exponents; // one entry per prime <= x, ascending p
    std::uint64_t distinct_count = 0;      // |alpha(X!)|
};

// Exponents of X! over all p <= X. Full Legendre loop for p*p <= x,
// the single term floor(x/p) above the square-root split.
ValuationProfile distinct_factorial_exponents(std::uint64_t x, const PrimeTable& table);
ValuationProfile distinct_factorial_exponents(std::uint64_t x);

// |S_p(X)| / sqrt(X / ln X), the quantity the Erdos bounds bracket.
double growth_ratio(std::uint64_t x, const PrimeTable& table);
double growth_ratio(std::uint64_t x);

} // namespace floorset

#endif
