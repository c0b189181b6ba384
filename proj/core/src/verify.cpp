#include "floorset/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "floorset/exact_arith.hpp"
#include "floorset/general_sets.hpp"
#include "floorset/hyperbolic_sets.hpp"
#include "floorset/prime_density.hpp"
#include "floorset/prime_sets.hpp"

namespace floorset::verify {

using u64 = std::uint64_t;
using boost::multiprecision::cpp_int;

bool SuiteReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

std::uint64_t SuiteReport::total_checks() const {
    return std::accumulate(results.begin(), results.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const CheckResult& r) { return acc + r.checks; });
}

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Accumulates comparisons; keeps the first failure's description.
struct Checker {
    CheckResult result;

    explicit Checker(std::string name) {
        result.name = std::move(name);
        result.passed = true;
    }

    void expect(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok && result.passed) {
            result.passed = false;
            result.detail = what;
        }
    }

    // Measurement annotation shown on PASS rows.
    void note(const std::string& s) {
        if (result.passed) result.detail = s;
    }

    CheckResult take() { return std::move(result); }
};

std::vector<RationalExponent> exponent_grid() {
    return {RationalExponent::make(2, 1), RationalExponent::make(3, 1),
            RationalExponent::make(4, 1), RationalExponent::make(3, 2),
            RationalExponent::make(5, 2), RationalExponent::make(7, 3)};
}

std::string at(u64 x, const RationalExponent& t) {
    return "X=" + std::to_string(x) + " t=" + t.str();
}

} // namespace

SuiteReport run_thm1(const Options& opts) {
    SuiteReport report;
    report.suite = "thm1";
    const auto ts = exponent_grid();

    {
        Checker c("closed-form-vs-early-stop");
        for (const auto& t : ts)
            for (u64 x = 1; x <= 20000; ++x) {
                const auto card = card_s_t(x, t);
                const auto seen = enumerate_s_t(x, t, EnumerationMode::EarlyStop);
                c.expect(card.cardinality == seen.elements.size(),
                         at(x, t) + ": formula " + std::to_string(card.cardinality) +
                             " != enumerated " + std::to_string(seen.elements.size()));
            }
        if (opts.full()) {
            std::mt19937_64 rng(0x666c6f6f72736574ull);
            std::uniform_int_distribution<u64> dist(20001, 1'000'000'000'000ull);
            for (const auto& t : ts)
                for (int i = 0; i < 60; ++i) {
                    const u64 x = dist(rng);
                    const auto card = card_s_t(x, t);
                    const auto seen = enumerate_s_t(x, t, EnumerationMode::EarlyStop);
                    c.expect(card.cardinality == seen.elements.size(),
                             at(x, t) + ": formula " + std::to_string(card.cardinality) +
                                 " != enumerated " + std::to_string(seen.elements.size()));
                }
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("early-stop-vs-naive");
        for (const auto& t : ts)
            for (u64 x = 1; x <= 2000; ++x) {
                const auto fast = enumerate_s_t(x, t, EnumerationMode::EarlyStop);
                const auto slow = enumerate_s_t(x, t, EnumerationMode::Naive);
                c.expect(fast.elements == slow.elements, at(x, t) + ": element lists differ");
            }
        report.results.push_back(c.take());
    }

    {
        Checker c("divisor-closed-form");
        const u64 top = opts.full() ? 1'000'000 : 200'000;
        for (u64 x = 1; x <= top; ++x)
            c.expect(card_s1(x) == count_s1_by_blocks(x),
                     "X=" + std::to_string(x) + ": sqrt formula != block count");
        const auto t1 = RationalExponent::make(1, 1);
        for (u64 x = 1; x <= 2000; ++x) {
            const auto naive = enumerate_s_t(x, t1, EnumerationMode::Naive);
            c.expect(naive.elements == s1_elements_by_blocks(x),
                     "X=" + std::to_string(x) + ": block elements != naive elements");
        }
        for (u64 x : {1ull, 2ull, 10ull, 100ull, 10000ull, 123456ull}) {
            const auto els = s1_elements_by_blocks(x);
            c.expect(els.size() == card_s1(x),
                     "X=" + std::to_string(x) + ": element count != closed form");
            c.expect(std::adjacent_find(els.begin(), els.end(), std::greater_equal<u64>()) ==
                         els.end(),
                     "X=" + std::to_string(x) + ": elements not strictly ascending");
        }
        if (opts.full())
            for (u64 x : {1'000'000ull, 100'000'000ull, 10'000'000'000ull, 1'000'000'000'000ull})
                c.expect(card_s1(x) == count_s1_by_blocks(x),
                         "X=" + std::to_string(x) + ": sqrt formula != block count");
        report.results.push_back(c.take());
    }

    {
        Checker c("head-tail-structure");
        for (const auto& t : ts)
            for (u64 x : {10000ull, 12345ull, 20000ull}) {
                const auto ci = critical_index(x, t);
                const u64 n0 = ci.floor_value;
                const auto v = [&](u64 n) { return floor_x_over_n_pow_t(x, n, t); };

                bool strict = true;
                for (u64 n = 1; n < n0 && strict; ++n)
                    if (v(n) <= v(n + 1)) strict = false;
                c.expect(strict, at(x, t) + ": head values not strictly decreasing");

                bool small_steps = true;
                u64 prev = v(n0 + 1);
                for (u64 n = n0 + 2; n <= x && small_steps; ++n) {
                    const u64 cur = v(n);
                    if (cur > prev || prev - cur > 1) small_steps = false;
                    prev = cur;
                }
                c.expect(small_steps, at(x, t) + ": tail step above 1");
                c.expect(v(x) == 0, at(x, t) + ": last value nonzero");

                // The two regions overlap in exactly one value or none;
                // the closed form is the literal union count.
                const auto card = card_s_t(x, t);
                const u64 overlap = v(n0) == v(n0 + 1) ? 1 : 0;
                c.expect(card.cardinality == n0 + v(n0 + 1) + 1 - overlap,
                         at(x, t) + ": union bookkeeping does not reproduce the formula");
                if (!card.a_is_integer)
                    c.expect((card.epsilon == 0) == (overlap == 1),
                             at(x, t) + ": epsilon disagrees with the value pattern");
            }
        report.results.push_back(c.take());
    }

    {
        Checker c("estimate-sandwich");
        std::string measured;
        for (const auto& pin : fixtures::kSandwichPins) {
            const auto t = RationalExponent::make(pin.num, pin.den);
            double maxd = 0.0;
            for (u64 x = 2; x <= 20000; ++x) {
                const double d = std::fabs(static_cast<double>(card_s_t(x, t).cardinality) -
                                           estimate_card_s_t(x, t));
                maxd = std::max(maxd, d);
            }
            c.expect(maxd <= 1.0,
                     "t=" + t.str() + ": estimate strays " + fmt_g(maxd) + " > 1 from the count");
            c.expect(std::fabs(maxd - pin.max_abs_diff) <= 1e-9,
                     "t=" + t.str() + ": max gap " + fmt_g(maxd) + " drifted from pinned " +
                         fmt_g(pin.max_abs_diff));
            if (!measured.empty()) measured += ", ";
            measured += t.str() + ":" + fmt_g(maxd).substr(0, 7);
        }
        c.note("max |count - estimate|: " + measured);
        report.results.push_back(c.take());
    }

    return report;
}

SuiteReport run_thm2(const Options& opts) {
    SuiteReport report;
    report.suite = "thm2";
    const u64 dense_top = opts.full() ? 20000 : 5000;
    const u64 limit = opts.full() ? 10'000'000 : 1'000'000;
    const PrimeTable table = opts.sieve_cache_path.empty()
                                 ? sieve(limit)
                                 : sieve_cached(limit, opts.sieve_cache_path);
    const auto count_primes_upto = [&](u64 n) {
        return static_cast<u64>(std::upper_bound(table.primes.begin(), table.primes.end(), n) -
                                table.primes.begin());
    };

    {
        Checker c("set-size-vs-distinct-exponents");
        for (u64 x = 2; x <= dense_top; ++x) {
            const auto sp = enumerate_s_p(x, table);
            const auto prof = distinct_factorial_exponents(x, table);
            c.expect(sp.size() == prof.distinct_count,
                     "X=" + std::to_string(x) + ": |S_p| " + std::to_string(sp.size()) +
                         " != distinct exponent count " + std::to_string(prof.distinct_count));
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("set-size-log-points");
        std::vector<u64> xs = {10000, 100000, 1'000'000};
        if (opts.full()) xs.push_back(10'000'000);
        std::string measured;
        for (u64 x : xs) {
            const auto sp = enumerate_s_p(x, table);
            const auto prof = distinct_factorial_exponents(x, table);
            c.expect(sp.size() == prof.distinct_count,
                     "X=" + std::to_string(x) + ": |S_p| " + std::to_string(sp.size()) +
                         " != distinct exponent count " + std::to_string(prof.distinct_count));
            if (!measured.empty()) measured += ", ";
            measured += std::to_string(x) + ":" + std::to_string(sp.size());
        }
        c.note("|S_p| at " + measured);
        report.results.push_back(c.take());
    }

    {
        Checker c("legendre-vs-factorial-division");
        for (u64 x : {2ull, 3ull, 4ull, 5ull, 6ull, 7ull, 8ull, 9ull, 10ull, 16ull, 32ull, 100ull,
                      243ull, 256ull, 400ull}) {
            const auto by_division = factorial_exponents_by_division(x);
            c.expect(by_division.size() == count_primes_upto(x),
                     "X=" + std::to_string(x) + ": prime count mismatch against the sieve");
            for (const auto& pv : by_division)
                c.expect(legendre_valuation(x, pv.prime) == pv.exponent,
                         "X=" + std::to_string(x) + " p=" + std::to_string(pv.prime) +
                             ": Legendre sum != exponent read off X! by division");
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("sqrt-split-shortcut");
        for (u64 x : {10000ull, 100000ull, 1'000'000ull}) {
            const u64 root = int_nth_root(x, 2);
            const u64 lo = count_primes_upto(root);
            const u64 hi = count_primes_upto(x);
            for (u64 i = lo; i < hi; i += 97) {
                const u64 q = table.primes[i];
                c.expect(legendre_valuation(x, q) == x / q,
                         "X=" + std::to_string(x) + " q=" + std::to_string(q) +
                             ": single-term shortcut is not the full sum");
            }
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("valuation-partition");
        std::vector<u64> xs = {100, 1000, 10000, 100000};
        if (opts.full()) xs.push_back(1'000'000);
        for (u64 x : xs) {
            const auto prof = distinct_factorial_exponents(x, table);
            u64 small_count = 0, prev = 0, min_small = UINT64_MAX, max_large = 0;
            bool strict = true, first = true;
            std::set<u64> large_values;
            for (const auto& pv : prof.exponents) {
                if (pv.prime * pv.prime <= x) {
                    ++small_count;
                    if (!first && pv.exponent >= prev) strict = false;
                    prev = pv.exponent;
                    first = false;
                    min_small = std::min(min_small, pv.exponent);
                } else {
                    max_large = std::max(max_large, pv.exponent);
                    large_values.insert(pv.exponent);
                }
            }
            c.expect(strict,
                     "X=" + std::to_string(x) + ": exponents below sqrt(X) not strictly falling");
            c.expect(small_count == count_primes_upto(int_nth_root(x, 2)),
                     "X=" + std::to_string(x) + ": small-prime count != pi(sqrt X)");
            c.expect(small_count == 0 || large_values.empty() || max_large < min_small,
                     "X=" + std::to_string(x) + ": small and large exponent ranges collide");
            c.expect(prof.distinct_count == small_count + large_values.size(),
                     "X=" + std::to_string(x) + ": distinct count != pi(sqrt X) + large values");
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("growth-ratio-band");
        std::vector<u64> xs = {1000, 3162, 10000, 31623, 100000, 316228, 1'000'000};
        if (opts.full()) {
            xs.push_back(3'162'278);
            xs.push_back(10'000'000);
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (u64 x : xs) {
            const double r = growth_ratio(x, table);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            c.expect(r >= fixtures::kGrowthBandLo && r <= fixtures::kGrowthBandHi,
                     "X=" + std::to_string(x) + ": ratio " + fmt_g(r) + " outside [" +
                         fmt_g(fixtures::kGrowthBandLo) + ", " + fmt_g(fixtures::kGrowthBandHi) +
                         "]");
        }
        c.expect(hi / lo <= 2.0, "band spread " + fmt_g(hi / lo) + " above 2");
        c.note("ratio range [" + fmt_g(lo) + ", " + fmt_g(hi) + "]");
        report.results.push_back(c.take());
    }

    return report;
}

namespace {

FunctionSpec named_preset(std::string_view name, u64 x) {
    if (name == "hyperbola-t") return preset(name, x, RationalExponent::make(2, 1));
    return preset(name, x);
}

double named_closed_form(std::string_view name, u64 x) {
    if (name == "hyperbola-t")
        return preset_critical_point_closed_form(name, x, RationalExponent::make(2, 1));
    return preset_critical_point_closed_form(name, x);
}

} // namespace

SuiteReport run_thm3(const Options& opts) {
    SuiteReport report;
    report.suite = "thm3";
    constexpr const char* kPresets[] = {"hyperbola-t", "circle", "parabola", "sqrt"};

    {
        Checker c("solver-vs-closed-form");
        for (u64 x : {100ull, 1000ull, 10000ull, 100000ull, 1'000'000ull}) {
            for (const char* name : kPresets) {
                const double a = solve_critical_point(named_preset(name, x));
                const double cf = named_closed_form(name, x);
                c.expect(std::fabs(a - cf) <= 1e-9 * std::max(1.0, std::fabs(cf)),
                         std::string(name) + " X=" + std::to_string(x) + ": bisection " +
                             fmt_g(a) + " vs closed form " + fmt_g(cf));
            }
            const auto t32 = RationalExponent::make(3, 2);
            const double a = solve_critical_point(preset("hyperbola-t", x, t32));
            const double cf = preset_critical_point_closed_form("hyperbola-t", x, t32);
            c.expect(std::fabs(a - cf) <= 1e-9 * std::max(1.0, std::fabs(cf)),
                     "hyperbola-t(3/2) X=" + std::to_string(x) + ": bisection " + fmt_g(a) +
                         " vs closed form " + fmt_g(cf));
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("formula-discrepancy-pins");
        const std::vector<u64> grid =
            opts.full()
                ? std::vector<u64>{100, 316, 1000, 3162, 10000, 31623, 100000, 316228, 1'000'000}
                : std::vector<u64>{100, 316, 1000, 3162, 10000, 31623, 100000};
        std::string measured;
        for (const auto& pin : fixtures::kThm3Pins) {
            double max_all = 0.0, max_lower = 0.0;
            for (u64 x : grid) {
                const auto rep = asymptotic_cardinality(named_preset(pin.preset, x), true,
                                                        2'000'000);
                const double d = std::fabs(*rep.discrepancy);
                max_all = std::max(max_all, d);
                if (x <= 10000) max_lower = std::max(max_lower, d);
                c.expect(d <= pin.bound, std::string(pin.preset) + " X=" + std::to_string(x) +
                                             ": |formula - exact| = " + fmt_g(d) + " above " +
                                             fmt_g(pin.bound));
            }
            c.expect(std::ceil(max_all) == std::ceil(max_lower),
                     std::string(pin.preset) +
                         ": discrepancy ceiling grows between X <= 1e4 and the full grid");
            if (opts.full()) {
                c.expect(std::fabs(max_all - pin.max_full) <= 1e-9,
                         std::string(pin.preset) + ": max |d| " + fmt_g(max_all) +
                             " drifted from pinned " + fmt_g(pin.max_full));
                c.expect(std::fabs(max_lower - pin.max_lower) <= 1e-9,
                         std::string(pin.preset) + ": lower-grid max |d| " + fmt_g(max_lower) +
                             " drifted from pinned " + fmt_g(pin.max_lower));
            }
            if (!measured.empty()) measured += ", ";
            measured += std::string(pin.preset) + ":" + fmt_g(max_all).substr(0, 6);
        }
        c.note("max |formula - exact|: " + measured);
        report.results.push_back(c.take());
    }

    {
        Checker c("circle-leading-term");
        std::vector<u64> xs = {1000, 10000, 100000};
        if (opts.full()) xs.push_back(1'000'000);
        const double lead = 2.0 - std::sqrt(2.0);
        for (u64 x : xs) {
            const auto rep = asymptotic_cardinality(named_preset("circle", x), true, 2'000'000);
            const double rel = std::fabs(*rep.discrepancy) / static_cast<double>(*rep.exact_count);
            c.expect(rel <= 0.01, "X=" + std::to_string(x) + ": relative error " + fmt_g(rel) +
                                      " above 1e-2");
            const double per_x = rep.formula_value / static_cast<double>(x);
            c.expect(std::fabs(per_x - lead) <= 0.01,
                     "X=" + std::to_string(x) + ": formula/X = " + fmt_g(per_x) +
                         " strays from 2 - sqrt(2)");
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("hyperbola-vs-integer-formula");
        for (const auto& t : {RationalExponent::make(2, 1), RationalExponent::make(3, 1)})
            for (u64 x = 1; x <= 10000; ++x) {
                const u64 by_preset = count_s_f(preset("hyperbola-t", x, t));
                const u64 by_formula = card_s_t(x, t).cardinality;
                c.expect(by_preset == by_formula,
                         at(x, t) + ": preset count " + std::to_string(by_preset) +
                             " != integer closed form " + std::to_string(by_formula));
            }
        report.results.push_back(c.take());
    }

    {
        Checker c("enumeration-consistency");
        for (const char* name : kPresets)
            for (u64 x : {5ull, 17ull, 100ull, 1000ull}) {
                const auto spec = named_preset(name, x);
                const auto els = enumerate_s_f(spec);
                c.expect(els.size() == count_s_f(spec),
                         std::string(name) + " X=" + std::to_string(x) +
                             ": enumerate and count disagree");
                std::set<u64> naive;
                for (u64 n = 1; n <= x; ++n) naive.insert(spec.exact_floor(n));
                c.expect(els == std::vector<u64>(naive.begin(), naive.end()),
                         std::string(name) + " X=" + std::to_string(x) +
                             ": elements differ from set-based enumeration");
            }
        report.results.push_back(c.take());
    }

    return report;
}

SuiteReport run_density(const Options& opts) {
    SuiteReport report;
    report.suite = "density";
    const auto t1 = RationalExponent::make(1, 1);

    {
        Checker c("pnt-point-1e6");
        const auto rep = density_report(1'000'000, t1);
        c.expect(rep.prime_count == fixtures::kPntPrimeCount1e6,
                 "prime count " + std::to_string(rep.prime_count) + " != pinned " +
                     std::to_string(fixtures::kPntPrimeCount1e6));
        c.expect(rep.set_size == fixtures::kPntSetSize1e6,
                 "set size " + std::to_string(rep.set_size) + " != pinned " +
                     std::to_string(fixtures::kPntSetSize1e6));
        c.expect(rep.pnt_ratio >= 0.8 && rep.pnt_ratio <= 1.25,
                 "ratio " + fmt_g(rep.pnt_ratio) + " outside [0.8, 1.25]");
        c.note("ratio " + fmt_g(rep.pnt_ratio));
        report.results.push_back(c.take());
    }

    {
        Checker c("pnt-ratio-approach");
        double first_dev = 0.0, last_dev = 0.0;
        for (u64 x : {100ull, 1000ull, 10000ull, 100000ull, 1'000'000ull}) {
            const auto rep = density_report(x, t1);
            const double dev = std::fabs(rep.pnt_ratio - 1.0);
            if (x == 100) first_dev = dev;
            last_dev = dev;
            c.expect(dev <= 0.30,
                     "X=" + std::to_string(x) + ": |ratio - 1| = " + fmt_g(dev) + " above 0.30");
        }
        c.expect(last_dev < first_dev, "|ratio - 1| did not shrink from X=1e2 (" +
                                           fmt_g(first_dev) + ") to X=1e6 (" + fmt_g(last_dev) +
                                           ")");
        c.note("|ratio - 1|: " + fmt_g(first_dev) + " at 1e2 -> " + fmt_g(last_dev) + " at 1e6");
        report.results.push_back(c.take());
    }

    {
        Checker c("quadrature-cross-check");
        for (u64 x : {16ull, 10000ull, 1'000'000ull}) {
            const double simpson = ma_wu_main_term(x);
            const double midpoint = midpoint_main_term(x);
            c.expect(std::fabs(simpson - midpoint) <= 1e-6 * std::fabs(simpson),
                     "X=" + std::to_string(x) + ": Simpson " + fmt_g(simpson) + " vs midpoint " +
                         fmt_g(midpoint));
        }
        report.results.push_back(c.take());
    }

    {
        Checker c("main-term-regression");
        const double v16 = ma_wu_main_term(16);
        const double v1e6 = ma_wu_main_term(1'000'000);
        c.expect(std::fabs(v16 - fixtures::kMaWu16) <= 1e-6 * fixtures::kMaWu16,
                 "value at 16 " + fmt_g(v16) + " drifted from pinned " + fmt_g(fixtures::kMaWu16));
        c.expect(std::fabs(v1e6 - fixtures::kMaWu1e6) <= 1e-6 * fixtures::kMaWu1e6,
                 "value at 1e6 " + fmt_g(v1e6) + " drifted from pinned " +
                     fmt_g(fixtures::kMaWu1e6));
        report.results.push_back(c.take());
    }

    {
        Checker c("estimate-race");
        const auto r6 = density_report(1'000'000, t1);
        const double pc6 = static_cast<double>(r6.prime_count);
        const double dh6 = std::fabs(pc6 / *r6.hey_estimate - 1.0);
        const double dm6 = std::fabs(pc6 / *r6.ma_wu_main_term - 1.0);
        c.expect(std::fabs(dh6 - fixtures::kHeyDelta1e6) <= 1e-4,
                 "simple-estimate delta at 1e6 " + fmt_g(dh6) + " drifted from pinned " +
                     fmt_g(fixtures::kHeyDelta1e6));
        c.expect(std::fabs(dm6 - fixtures::kMaWuDelta1e6) <= 1e-4,
                 "main-term delta at 1e6 " + fmt_g(dm6) + " drifted from pinned " +
                     fmt_g(fixtures::kMaWuDelta1e6));
        c.expect(dh6 < dm6, "expected the simple estimate to still lead at X=1e6");

        const auto r9 = density_report(1'000'000'000, t1);
        c.expect(r9.prime_count == fixtures::kPntPrimeCount1e9,
                 "prime count at 1e9 " + std::to_string(r9.prime_count) + " != pinned " +
                     std::to_string(fixtures::kPntPrimeCount1e9));
        c.expect(r9.set_size == fixtures::kPntSetSize1e9,
                 "set size at 1e9 " + std::to_string(r9.set_size) + " != pinned " +
                     std::to_string(fixtures::kPntSetSize1e9));
        const double pc9 = static_cast<double>(r9.prime_count);
        const double dh9 = std::fabs(pc9 / *r9.hey_estimate - 1.0);
        const double dm9 = std::fabs(pc9 / *r9.ma_wu_main_term - 1.0);
        c.expect(dm9 < dh9, "main term does not lead at X=1e9: " + fmt_g(dm9) + " vs " +
                                fmt_g(dh9));
        c.note("deltas at 1e9: main term " + fmt_g(dm9) + ", simple " + fmt_g(dh9));
        report.results.push_back(c.take());
    }

    {
        Checker c("spot-x100-t2");
        const auto rep = density_report(100, RationalExponent::make(2, 1));
        c.expect(rep.set_size == 8, "set size " + std::to_string(rep.set_size) + " != 8");
        c.expect(rep.prime_count == 2,
                 "prime count " + std::to_string(rep.prime_count) + " != 2");
        report.results.push_back(c.take());
    }

    {
        Checker c("deterministic-rerun");
        const auto a = density_report(100000, t1);
        const auto b = density_report(100000, t1);
        c.expect(a.prime_count == b.prime_count && a.set_size == b.set_size,
                 "counts changed between runs");
        c.expect(fmt_g(a.pnt_ratio) == fmt_g(b.pnt_ratio) &&
                     fmt_g(*a.ma_wu_main_term) == fmt_g(*b.ma_wu_main_term) &&
                     fmt_g(*a.hey_estimate) == fmt_g(*b.hey_estimate),
                 "serialized doubles changed between runs");
        report.results.push_back(c.take());
    }

    (void)opts;
    return report;
}

std::vector<SuiteReport> run_suites(const std::string& suite, const Options& opts) {
    std::vector<SuiteReport> out;
    if (suite == "thm1" || suite == "all") out.push_back(run_thm1(opts));
    if (suite == "thm2" || suite == "all") out.push_back(run_thm2(opts));
    if (suite == "thm3" || suite == "all") out.push_back(run_thm3(opts));
    if (suite == "density" || suite == "all") out.push_back(run_density(opts));
    if (out.empty())
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected thm1, thm2, thm3, density, or all)");
    return out;
}

void print_summary(std::ostream& os, const std::vector<SuiteReport>& reports) {
    std::uint64_t checks = 0, failures = 0, rows = 0;
    os << std::left << std::setw(9) << "suite" << std::setw(34) << "check" << std::setw(7)
       << "result" << std::right << std::setw(9) << "checks"
       << "  detail\n";
    for (const auto& rep : reports)
        for (const auto& r : rep.results) {
            os << std::left << std::setw(9) << rep.suite << std::setw(34) << r.name
               << std::setw(7) << (r.passed ? "PASS" : "FAIL") << std::right << std::setw(9)
               << r.checks;
            if (!r.detail.empty()) os << "  " << r.detail;
            os << '\n';
            checks += r.checks;
            ++rows;
            if (!r.passed) ++failures;
        }
    os << rows << " checks, " << checks << " comparisons, " << failures << " failed\n";
}

double midpoint_main_term(std::uint64_t x) {
    if (x < 16) throw std::invalid_argument("midpoint_main_term requires X >= 16");
    const double xd = static_cast<double>(x);
    const double s = std::sqrt(xd);
    const auto integrate = [&](auto&& f) {
        double prev = 0.0;
        for (u64 n = 64; n <= (1ull << 22); n *= 2) {
            const double h = (s - 2.0) / static_cast<double>(n);
            double acc = 0.0;
            for (u64 i = 0; i < n; ++i)
                acc += f(2.0 + (static_cast<double>(i) + 0.5) * h);
            const double cur = acc * h;
            if (n > 64 && std::fabs(cur - prev) <= 1e-7 * std::fabs(cur)) return cur;
            prev = cur;
        }
        return prev;
    };
    const double i1 = integrate([](double t) { return 1.0 / std::log(t); });
    const double i2 = integrate([&](double t) { return 1.0 / std::log(xd / t); });
    return i1 + i2;
}

std::vector<PrimeValuation> factorial_exponents_by_division(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("factorial_exponents_by_division requires X >= 2");
    if (x > 2000)
        throw std::invalid_argument("factorial_exponents_by_division: X above 2000 is too slow");
    cpp_int fact = 1;
    for (u64 n = 2; n <= x; ++n) fact *= n;
    std::vector<PrimeValuation> out;
    for (u64 p : sieve(x).primes) {
        PrimeValuation pv;
        pv.prime = p;
        while (fact % p == 0) {
            fact /= p;
            ++pv.exponent;
        }
        out.push_back(pv);
    }
    if (fact != 1)
        throw std::logic_error("factorial_exponents_by_division: residue after all primes");
    return out;
}

} // namespace floorset::verify
