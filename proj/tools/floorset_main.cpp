// floorset: exact and asymptotic cardinalities of floor-function sets,
// with machine-readable CSV/NDJSON output and a self-check runner.

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "floorset/errors.hpp"
#include "floorset/general_sets.hpp"
#include "floorset/hyperbolic_sets.hpp"
#include "floorset/output_record.hpp"
#include "floorset/prime_density.hpp"
#include "floorset/prime_sets.hpp"
#include "floorset/verify.hpp"

namespace {

using floorset::OutputRecord;
using floorset::RationalExponent;
using u64 = std::uint64_t;

bool parse_range(const std::string& s, u64& lo, u64& hi) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) return false;
    const auto num = [](const std::string& part, u64& out) {
        const char* first = part.data();
        const char* last = first + part.size();
        const auto [ptr, ec] = std::from_chars(first, last, out);
        return ec == std::errc{} && ptr == last && part.size() > 0;
    };
    return num(s.substr(0, dots), lo) && num(s.substr(dots + 2), hi) && lo >= 1 && lo <= hi;
}

std::string sieve_cache_path() {
    const char* env = std::getenv("FLOORSET_SIEVE_CACHE");
    return env ? env : "";
}

floorset::PrimeTable make_table(u64 limit) {
    const auto path = sieve_cache_path();
    return path.empty() ? floorset::sieve(limit) : floorset::sieve_cached(limit, path);
}

// Contiguous chunks, one future each, merged back in range order so
// the output is identical no matter how many workers ran.
template <typename PerX>
std::vector<OutputRecord> scan_records(u64 lo, u64 hi, PerX&& per_x) {
    const u64 count = hi - lo + 1;
    const u64 workers = std::max(1u, std::thread::hardware_concurrency());
    const u64 chunks = std::min(count, count < 256 ? u64{1} : workers * 4);
    std::vector<std::future<std::vector<OutputRecord>>> parts;
    parts.reserve(chunks);
    for (u64 c = 0; c < chunks; ++c) {
        const u64 a = lo + count * c / chunks;
        const u64 b = lo + count * (c + 1) / chunks - 1;
        parts.push_back(std::async(std::launch::async, [a, b, &per_x] {
            std::vector<OutputRecord> recs;
            recs.reserve(b - a + 1);
            for (u64 x = a; x <= b; ++x) recs.push_back(per_x(x));
            return recs;
        }));
    }
    std::vector<OutputRecord> all;
    all.reserve(count);
    for (auto& part : parts)
        for (auto& rec : part.get()) all.push_back(std::move(rec));
    return all;
}

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
    if (format == "json")
        floorset::write_ndjson(std::cout, records);
    else
        floorset::write_csv(std::cout, records);
}

OutputRecord card_record(u64 x, const RationalExponent& t) {
    OutputRecord rec;
    rec.add("x", x);
    rec.add("t", t.str());
    if (t.is_one()) {
        rec.add("cardinality", floorset::card_s1(x));
        return rec;
    }
    const auto rep = floorset::card_s_t(x, t);
    rec.add("cardinality", rep.cardinality);
    rec.add("floor_a", rep.floor_a);
    rec.add("a_is_integer", rep.a_is_integer);
    rec.add("epsilon", static_cast<std::int64_t>(rep.epsilon));
    return rec;
}

int run_card(u64 x, const std::string& t_text, const std::string& scan,
             const std::string& format) {
    const auto t = RationalExponent::parse(t_text);
    u64 lo = x, hi = x;
    if (!scan.empty() && !parse_range(scan, lo, hi))
        throw std::invalid_argument("--scan expects MIN..MAX with 1 <= MIN <= MAX");
    emit(scan_records(lo, hi, [&](u64 xi) { return card_record(xi, t); }), format);
    return 0;
}

int run_prime_set(u64 x, const std::string& scan, const std::string& format) {
    u64 lo = x, hi = x;
    if (!scan.empty() && !parse_range(scan, lo, hi))
        throw std::invalid_argument("--scan expects MIN..MAX with 1 <= MIN <= MAX");
    if (lo < 2) throw std::invalid_argument("prime-set requires X >= 2");
    const auto table = make_table(hi);
    std::atomic<bool> all_equal{true};
    const auto per_x = [&](u64 xi) {
        const auto sp = floorset::enumerate_s_p(xi, table);
        const auto prof = floorset::distinct_factorial_exponents(xi, table);
        const bool equal = sp.size() == prof.distinct_count;
        if (!equal) all_equal.store(false, std::memory_order_relaxed);
        OutputRecord rec;
        rec.add("x", xi);
        rec.add("set_size", static_cast<u64>(sp.size()));
        rec.add("distinct_exponents", prof.distinct_count);
        rec.add("equal", equal);
        rec.add("growth_ratio", floorset::growth_ratio(xi, table));
        return rec;
    };
    emit(scan_records(lo, hi, per_x), format);
    if (!all_equal.load()) {
        std::cerr << "floorset: |S_p(X)| and the distinct exponent count disagree\n";
        return 1;
    }
    return 0;
}

int run_general(const std::string& preset_name, u64 x, const std::string& t_text,
                bool with_exact, const std::string& format) {
    std::optional<RationalExponent> t;
    if (!t_text.empty()) t = RationalExponent::parse(t_text);
    const auto spec = floorset::preset(preset_name, x, t);
    const auto rep = floorset::asymptotic_cardinality(spec, with_exact);
    OutputRecord rec;
    rec.add("x", x);
    rec.add("preset", preset_name);
    if (t) rec.add("t", t->str());
    rec.add("a", rep.critical_point);
    rec.add("formula", rep.formula_value);
    if (with_exact) {
        rec.add("exact", *rep.exact_count);
        rec.add("discrepancy", *rep.discrepancy);
    }
    emit({rec}, format);
    return 0;
}

int run_density(u64 x, const std::string& t_text, const std::string& format) {
    const auto t = RationalExponent::parse(t_text);
    const auto rep = floorset::density_report(x, t);
    OutputRecord rec;
    rec.add("x", rep.x);
    rec.add("t", rep.t.str());
    rec.add("prime_count", rep.prime_count);
    rec.add("set_size", rep.set_size);
    rec.add("pnt_ratio", rep.pnt_ratio);
    if (rep.hey_estimate)
        rec.add("hey_estimate", *rep.hey_estimate);
    else
        rec.add("hey_estimate", OutputRecord::Empty{});
    if (rep.ma_wu_main_term)
        rec.add("ma_wu_main_term", *rep.ma_wu_main_term);
    else
        rec.add("ma_wu_main_term", OutputRecord::Empty{});
    emit({rec}, format);
    return 0;
}

int run_verify(const std::string& suite, double budget) {
    floorset::verify::Options opts;
    opts.budget_seconds = budget;
    opts.sieve_cache_path = sieve_cache_path();
    const auto started = std::chrono::steady_clock::now();
    const auto reports = floorset::verify::run_suites(suite, opts);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    floorset::verify::print_summary(std::cout, reports);
    std::fprintf(stderr, "floorset: verify %s took %.1fs (budget %.0fs)\n", suite.c_str(),
                 elapsed, budget);
    for (const auto& rep : reports)
        if (!rep.all_passed()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic cardinalities of floor-function sets"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"csv", "json"};

    auto* card = app.add_subcommand("card", "|S_t(X)| by the closed form (t = 1 included)");
    u64 card_x = 0;
    std::string card_t, card_scan, card_format = "csv";
    auto* card_x_opt = card->add_option("--x", card_x, "right end X of the set");
    card->add_option("--t", card_t, "exponent t: integer, u/v, or finite decimal")->required();
    auto* card_scan_opt =
        card->add_option("--scan", card_scan, "range MIN..MAX, one output row per X");
    card->add_option("--format", card_format, "output format")
        ->check(CLI::IsMember(formats));
    card_x_opt->excludes(card_scan_opt);
    card_scan_opt->excludes(card_x_opt);

    auto* prime_set =
        app.add_subcommand("prime-set", "|S_p(X)| against the distinct exponents of X!");
    u64 prime_x = 0;
    std::string prime_scan, prime_format = "csv";
    auto* prime_x_opt = prime_set->add_option("--x", prime_x, "right end X, X >= 2");
    auto* prime_scan_opt =
        prime_set->add_option("--scan", prime_scan, "range MIN..MAX, one output row per X");
    prime_set->add_option("--format", prime_format, "output format")
        ->check(CLI::IsMember(formats));
    prime_x_opt->excludes(prime_scan_opt);
    prime_scan_opt->excludes(prime_x_opt);

    auto* general =
        app.add_subcommand("general", "critical point and case formula for a preset f");
    u64 general_x = 0;
    std::string general_preset, general_t, general_format = "csv";
    bool general_exact = false;
    general->add_option("--preset", general_preset, "hyperbola-t, circle, parabola, or sqrt")
        ->required();
    general->add_option("--x", general_x, "right end X of the domain")->required();
    general->add_option("--t", general_t, "exponent for hyperbola-t");
    general->add_flag("--with-exact", general_exact, "also enumerate and report discrepancy");
    general->add_option("--format", general_format, "output format")
        ->check(CLI::IsMember(formats));

    auto* density = app.add_subcommand("density", "prime counts and density ratios of S_t(X)");
    u64 density_x = 0;
    std::string density_t, density_format = "csv";
    density->add_option("--x", density_x, "right end X of the set")->required();
    density->add_option("--t", density_t, "exponent t")->required();
    density->add_option("--format", density_format, "output format")
        ->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "run the oracle-equivalence suites");
    std::string verify_suite = "all";
    double verify_budget = 300.0;
    verify->add_option("--suite", verify_suite, "thm1, thm2, thm3, density, or all");
    verify->add_option("--budget", verify_budget, "time budget in seconds")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(card)) {
            if (card_scan.empty() && card_x_opt->count() == 0)
                throw std::invalid_argument("card needs --x or --scan");
            return run_card(card_x, card_t, card_scan, card_format);
        }
        if (app.got_subcommand(prime_set)) {
            if (prime_scan.empty() && prime_x_opt->count() == 0)
                throw std::invalid_argument("prime-set needs --x or --scan");
            return run_prime_set(prime_x, prime_scan, prime_format);
        }
        if (app.got_subcommand(general))
            return run_general(general_preset, general_x, general_t, general_exact,
                               general_format);
        if (app.got_subcommand(density)) return run_density(density_x, density_t, density_format);
        if (app.got_subcommand(verify)) return run_verify(verify_suite, verify_budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "floorset: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "floorset: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
