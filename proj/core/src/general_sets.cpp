#include "floorset/general_sets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "detail_int128.hpp"
#include "floorset/errors.hpp"
#include "floorset/exact_arith.hpp"

namespace floorset {

using detail::u128;
using detail::u64;

std::string_view to_string(SignClass c) {
    switch (c) {
        case SignClass::DecConvex: return "dec-convex";
        case SignClass::DecConcave: return "dec-concave";
        case SignClass::IncConvex: return "inc-convex";
        case SignClass::IncConcave: return "inc-concave";
    }
    return "unknown";
}

namespace {

bool is_increasing(SignClass c) {
    return c == SignClass::IncConvex || c == SignClass::IncConcave;
}

bool is_convex(SignClass c) {
    return c == SignClass::DecConvex || c == SignClass::IncConvex;
}

// Spot-check the declared sign pattern at interior grid points.
void validate_spec(const FunctionSpec& spec) {
    if (!spec.evaluate || !spec.derivative)
        throw std::invalid_argument("FunctionSpec: evaluate and derivative are required");
    if (!(spec.x > 1.0))
        throw std::invalid_argument("FunctionSpec: domain [1, X] needs X > 1");
    const bool inc = is_increasing(spec.sign_class);
    const bool cvx = is_convex(spec.sign_class);
    double prev_d = std::numeric_limits<double>::quiet_NaN();
    for (int k = 1; k <= 7; ++k) {
        const double y = 1.0 + (spec.x - 1.0) * k / 8.0;
        const double fy = spec.evaluate(y);
        const double dy = spec.derivative(y);
        if (std::isnan(fy) || fy < 0.0)
            throw std::invalid_argument("FunctionSpec: f must be >= 0 on (1, X)");
        if (std::isnan(dy) || dy == 0.0 || (dy > 0.0) != inc)
            throw std::invalid_argument("FunctionSpec: derivative sign contradicts sign_class");
        if (!std::isnan(prev_d)) {
            const double step = dy - prev_d;
            // Allow flat-to-rounding steps; reject a clearly wrong curvature.
            const double tol = 1e-12 * (std::fabs(dy) + std::fabs(prev_d));
            if (cvx ? step < -tol : step > tol)
                throw std::invalid_argument("FunctionSpec: curvature contradicts sign_class");
        }
        prev_d = dy;
    }
}

} // namespace

double solve_critical_point(const FunctionSpec& spec, double tol) {
    validate_spec(spec);
    if (tol < 0.0) throw std::invalid_argument("solve_critical_point: tol must be >= 0");
    const double target = is_increasing(spec.sign_class) ? 1.0 : -1.0;
    const auto g = [&](double y) { return spec.derivative(y) - target; };

    double lo = 1.0, hi = spec.x;
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if (std::isnan(glo) || std::isnan(ghi) || (glo < 0.0) == (ghi < 0.0))
        throw NoCriticalPoint("f'(y) = +/-1 has no root in [1, X]");

    // f'' keeps one sign, so g is monotone and bisection is exact.
    // Refine to machine precision; tol is only an upper bound.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(mid)) break;
    }
    return lo + (hi - lo) / 2.0;
}

namespace {

u64 floor_eval(const FunctionSpec& spec, u64 n, bool& warned) {
    if (spec.exact_floor) return spec.exact_floor(n);
    const double v = spec.evaluate(static_cast<double>(n));
    if (std::isnan(v) || v < 0.0)
        throw std::domain_error("enumerate_s_f: f(n) must be >= 0");
    const double fl = std::floor(v);
    const double frac = v - fl;
    constexpr double kGuard = 0x1p-40;
    if (frac < kGuard || 1.0 - frac < kGuard) {
        if (spec.evaluate_hp) {
            const long double vh = spec.evaluate_hp(static_cast<long double>(n));
            return static_cast<u64>(std::floor(vh));
        }
        if (!warned) {
            std::fprintf(stderr,
                         "floorset: f(%llu) within 2^-40 of an integer and no exact or "
                         "high-precision path is available\n",
                         static_cast<unsigned long long>(n));
            warned = true;
        }
    }
    return static_cast<u64>(fl);
}

u64 domain_top(const FunctionSpec& spec, u64 eval_cap) {
    if (!(spec.x >= 1.0)) throw std::invalid_argument("enumerate_s_f: X must be >= 1");
    const double fx = std::floor(spec.x);
    if (fx > static_cast<double>(eval_cap))
        throw CapExceeded("enumerate_s_f: floor(X) exceeds the evaluation cap");
    return static_cast<u64>(fx);
}

} // namespace

std::vector<u64> enumerate_s_f(const FunctionSpec& spec, u64 eval_cap) {
    const u64 top = domain_top(spec, eval_cap);
    std::vector<u64> values;
    bool warned = false;
    u64 prev = 0;
    for (u64 n = 1; n <= top; ++n) {
        const u64 v = floor_eval(spec, n, warned);
        // f strictly monotone: floor values are monotone, so adjacent
        // deduplication is global deduplication.
        if (values.empty() || v != prev) values.push_back(v);
        prev = v;
    }
    if (!is_increasing(spec.sign_class)) std::reverse(values.begin(), values.end());
    return values;
}

u64 count_s_f(const FunctionSpec& spec, u64 eval_cap) {
    const u64 top = domain_top(spec, eval_cap);
    u64 count = 0;
    bool warned = false;
    u64 prev = 0;
    for (u64 n = 1; n <= top; ++n) {
        const u64 v = floor_eval(spec, n, warned);
        if (count == 0 || v != prev) ++count;
        prev = v;
    }
    return count;
}

AsymptoticReport asymptotic_cardinality(const FunctionSpec& spec, bool with_exact, u64 eval_cap) {
    const double a = solve_critical_point(spec);
    const double fX = std::floor(spec.x);
    const auto clamp_arg = [&](double arg) {
        if (arg < 1.0) arg = 1.0;
        if (arg > fX) {
            std::fprintf(stderr, "floorset: clamping formula argument %.17g to floor(X) = %.17g\n",
                         arg, fX);
            arg = fX;
        }
        return arg;
    };
    const double fa = clamp_arg(std::floor(a));
    const double fa1 = clamp_arg(std::floor(a) + 1.0);
    const auto& f = spec.evaluate;

    double value = 0.0;
    switch (spec.sign_class) {
        case SignClass::DecConvex: value = f(fa1) - f(fX) + a; break;
        case SignClass::DecConcave: value = f(1.0) - f(fa) + spec.x - a; break;
        case SignClass::IncConvex: value = f(fa) - f(1.0) + spec.x - a; break;
        case SignClass::IncConcave: value = f(fX) - f(fa1) + a; break;
    }

    AsymptoticReport report;
    report.x = spec.x;
    report.sign_class = spec.sign_class;
    report.critical_point = a;
    report.formula_value = value;
    if (with_exact) {
        report.exact_count = count_s_f(spec, eval_cap);
        report.discrepancy = value - static_cast<double>(*report.exact_count);
    }
    return report;
}

FunctionSpec preset(std::string_view name, u64 x, std::optional<RationalExponent> t) {
    FunctionSpec spec;
    const double X = static_cast<double>(x);
    if (name == "hyperbola-t") {
        if (!t) throw std::invalid_argument("preset hyperbola-t requires t");
        if (!t->greater_than_one())
            throw std::invalid_argument("preset hyperbola-t requires t > 1");
        // X = 1 supports enumeration only; the asymptotic path needs X > 1.
        const RationalExponent tt = *t;
        const double td = tt.to_double();
        spec.evaluate = [X, td](double y) { return X * std::pow(y, -td); };
        spec.derivative = [X, td](double y) { return -td * X * std::pow(y, -td - 1.0); };
        spec.sign_class = SignClass::DecConvex;
        spec.exact_floor = [x, tt](u64 n) { return floor_x_over_n_pow_t(x, n, tt); };
    } else if (name == "circle") {
        if (x < 2) throw std::invalid_argument("preset circle requires X >= 2");
        spec.evaluate = [X](double y) { return std::sqrt(X * X - y * y); };
        spec.derivative = [X](double y) { return -y / std::sqrt(X * X - y * y); };
        spec.sign_class = SignClass::DecConcave;
        spec.exact_floor = [x](u64 n) {
            const u128 d = static_cast<u128>(x) * x - static_cast<u128>(n) * n;
            return detail::int_nth_root_u128(d, 2);
        };
    } else if (name == "parabola") {
        if (x < 2) throw std::invalid_argument("preset parabola requires X >= 2");
        spec.evaluate = [X](double y) { return y * y / X; };
        spec.derivative = [X](double y) { return 2.0 * y / X; };
        spec.sign_class = SignClass::IncConvex;
        spec.exact_floor = [x](u64 n) {
            return static_cast<u64>(static_cast<u128>(n) * n / x);
        };
    } else if (name == "sqrt") {
        if (x < 4) throw std::invalid_argument("preset sqrt requires X >= 4");
        spec.evaluate = [X](double y) { return std::sqrt(X * y); };
        spec.derivative = [X](double y) { return 0.5 * std::sqrt(X / y); };
        spec.sign_class = SignClass::IncConcave;
        spec.exact_floor = [x](u64 n) {
            return detail::int_nth_root_u128(static_cast<u128>(x) * n, 2);
        };
    } else {
        throw UnknownPreset("unknown preset: " + std::string(name));
    }
    spec.x = X;
    spec.name = std::string(name);
    return spec;
}

double preset_critical_point_closed_form(std::string_view name, u64 x,
                                         std::optional<RationalExponent> t) {
    const double X = static_cast<double>(x);
    if (name == "hyperbola-t") {
        if (!t) throw std::invalid_argument("preset hyperbola-t requires t");
        const double td = t->to_double();
        return std::pow(td * X, 1.0 / (td + 1.0));
    }
    if (name == "circle") return X / std::sqrt(2.0);
    if (name == "parabola") return X / 2.0;
    if (name == "sqrt") return X / 4.0;
    throw UnknownPreset("unknown preset: " + std::string(name));
}

} // namespace floorset
