#ifndef FLOORSET_VERIFY_HPP
#define FLOORSET_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "floorset/prime_sets.hpp"

namespace floorset::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::uint64_t checks = 0; // individual comparisons performed
    std::string detail;       // filled on failure or for measurements
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;
    bool all_passed() const;
    std::uint64_t total_checks() const;
};

struct Options {
    // Below 120 the suites fall back to their documented minimum
    // grids; at or above they run the full grids. Grids never shrink
    // below the minimums regardless of the value.
    double budget_seconds = 300.0;
    // When set, sieves go through the binary cache at this path.
    std::string sieve_cache_path;
    bool full() const { return budget_seconds >= 120.0; }
};

SuiteReport run_thm1(const Options& opts = {});
SuiteReport run_thm2(const Options& opts = {});
SuiteReport run_thm3(const Options& opts = {});
SuiteReport run_density(const Options& opts = {});

// suite in {thm1, thm2, thm3, density, all}; throws std::invalid_argument otherwise.
std::vector<SuiteReport> run_suites(const std::string& suite, const Options& opts = {});

void print_summary(std::ostream& os, const std::vector<SuiteReport>& reports);

// Composite-midpoint quadrature of the same two integrals as
// ma_wu_main_term; a deliberately different rule, used to cross-check it.
double midpoint_main_term(std::uint64_t x);

// v_p(X!) for every p <= X, read off a big-integer X! by repeated
// division. Independent of legendre_valuation; slow, X <= ~500.
std::vector<PrimeValuation> factorial_exponents_by_division(std::uint64_t x);

// Values measured once on the reference run and pinned. Tolerances
// live next to the assertions that use them.
namespace fixtures {

// S(10^6): prime count, set size (integers, exact).
inline constexpr std::uint64_t kPntPrimeCount1e6 = 277;
inline constexpr std::uint64_t kPntSetSize1e6 = 1999;

// S(10^9): first grid point where the Ma-Wu term beats the Hey
// estimate; the race below it is recorded, not asserted.
inline constexpr std::uint64_t kPntPrimeCount1e9 = 6184;
inline constexpr std::uint64_t kPntSetSize1e9 = 63244;

// Growth-ratio band over X in {1e3 .. 1e7}, half-decade steps.
inline constexpr double kGrowthBandLo = 2.5;
inline constexpr double kGrowthBandHi = 2.8;

// ma_wu_main_term values (Simpson, 1e-8 relative).
inline constexpr double kMaWu1e6 = 304.57723451921;
inline constexpr double kMaWu16 = 3.1197093471292;

// |prime_count/estimate - 1| at X = 10^6: the Hey estimate still
// leads at that scale.
inline constexpr double kMaWuDelta1e6 = 0.090543;
inline constexpr double kHeyDelta1e6 = 0.043276;

// Per-preset |formula - exact| maxima over the half-decade grid
// 100..1e6 (full) and its 100..1e4 prefix (lower); bound is the
// integer ceiling of the max, which must not grow between the two.
struct Thm3Pin {
    const char* preset;
    double max_full;
    double max_lower;
    double bound;
};
inline constexpr Thm3Pin kThm3Pins[] = {
    {"hyperbola-t", 0.98026221574076544, 0.61581325420350908, 1.0},
    {"circle", 1.8896006108261645, 1.6147447909302173, 2.0},
    {"parabola", 1.250023716915166, 1.0100000000000193, 2.0},
    {"sqrt", 0.9999980236243573, 0.99992096111100182, 1.0},
};

// Max |card_s_t - first-order estimate| over X in [2, 2e4], per t.
struct SandwichPin {
    std::uint64_t num, den;
    double max_abs_diff;
};
inline constexpr SandwichPin kSandwichPins[] = {
    {2, 1, 0.99913493342361903}, {3, 1, 0.99970369711911287},
    {4, 1, 0.99975584745319958}, {3, 2, 0.99975052417481442},
    {5, 2, 0.99953317977695381}, {7, 3, 0.99986022930955797},
};

} // namespace fixtures

} // namespace floorset::verify

#endif
