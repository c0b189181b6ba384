#ifndef FLOORSET_GENERAL_SETS_HPP
#define FLOORSET_GENERAL_SETS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floorset/rational_exponent.hpp"

namespace floorset {

// Sign pattern of (f', f'') on (1, X). Decides which of the four
// cardinality formulas applies to { floor(f(n)) : 1 <= n <= X }.
enum class SignClass {
    DecConvex,  // f' < 0, f'' > 0   e.g. X / y^t
    DecConcave, // f' < 0, f'' < 0   e.g. sqrt(X^2 - y^2)
    IncConvex,  // f' > 0, f'' > 0   e.g. y^2 / X
    IncConcave, // f' > 0, f'' < 0   e.g. sqrt(X y)
};

std::string_view to_string(SignClass c);

inline constexpr std::uint64_t kDefaultEvalCap = 100'000'000;

// A strictly monotone f >= 0 on [1, X] with one-signed curvature.
// exact_floor, when set, computes floor(f(n)) in integer arithmetic
// and is preferred over the double path. evaluate_hp is the
// higher-precision fallback used when a double value lands within
// 2^-40 of an integer and no exact path exists.
struct FunctionSpec {
    std::function<double(double)> evaluate;
    std::function<double(double)> derivative;
    SignClass sign_class = SignClass::DecConvex;
    double x = 0; // right end of the domain [1, X]
    std::function<std::uint64_t(std::uint64_t)> exact_floor;
    std::function<long double(long double)> evaluate_hp;
    std::string name;
};

struct AsymptoticReport {
    double x = 0;
    SignClass sign_class = SignClass::DecConvex;
    double critical_point = 0;        // root a of f'(y) = +/-1
    double formula_value = 0;         // raw case formula, no O(1) added
    std::optional<std::uint64_t> exact_count;
    std::optional<double> discrepancy; // formula_value - exact_count
};

// Bisection root of f'(y) = +1 (increasing f) or -1 (decreasing f)
// on [1, X], refined to machine precision; tol only caps the final
// interval width from above. Throws NoCriticalPoint when f' - (+/-1)
// has no sign change and no endpoint root.
double solve_critical_point(const FunctionSpec& spec, double tol = 0.0);

// The four-case count: picks the formula for spec.sign_class, clamps
// floor-arguments into [1, floor(X)] (warning on stderr when it has
// to), reports the raw real value.
AsymptoticReport asymptotic_cardinality(const FunctionSpec& spec,
                                        bool with_exact = false,
                                        std::uint64_t eval_cap = kDefaultEvalCap);

// { floor(f(n)) : n in [1, floor(X)] }, sorted ascending. Monotone f
// means adjacent-deduplication is global deduplication.
std::vector<std::uint64_t> enumerate_s_f(const FunctionSpec& spec,
                                         std::uint64_t eval_cap = kDefaultEvalCap);

// Distinct count only, O(1) memory.
std::uint64_t count_s_f(const FunctionSpec& spec,
                        std::uint64_t eval_cap = kDefaultEvalCap);

// Built-in instances: "hyperbola-t" (requires t > 1), "circle",
// "parabola", "sqrt" (requires x >= 4). Throws UnknownPreset.
FunctionSpec preset(std::string_view name, std::uint64_t x,
                    std::optional<RationalExponent> t = std::nullopt);

// a = (tX)^(1/(t+1)), X/sqrt(2), X/2, X/4 for the four presets.
double preset_critical_point_closed_form(std::string_view name, std::uint64_t x,
                                         std::optional<RationalExponent> t = std::nullopt);

} // namespace floorset

#endif
