#include "floorset/prime_density.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "floorset/errors.hpp"
#include "floorset/hyperbolic_sets.hpp"
#include "floorset/prime_sets.hpp"

namespace floorset {

using u64 = std::uint64_t;

u64 count_primes_in_set(std::span<const u64> elements) {
    u64 count = 0;
    for (u64 v : elements)
        if (is_prime_u64(v)) ++count;
    return count;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double eps, int depth) {
    const double m = (a + b) / 2.0;
    const double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    const double m = (a + b) / 2.0;
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(f, a, b, fa, fm, fb);
    // Two passes: rough value first, then absolute eps from the relative target.
    const double rough =
        adaptive_simpson(f, a, b, fa, fm, fb, whole, std::fabs(whole) * 1e-6 + 1e-12, 30);
    const double eps = std::fabs(rough) * 1e-8 + 1e-15;
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 48);
}

} // namespace

double ma_wu_main_term(u64 x) {
    if (x < 16) throw std::invalid_argument("ma_wu_main_term requires X >= 16");
    const double xd = static_cast<double>(x);
    const double s = std::sqrt(xd);
    const double i1 = integrate([](double t) { return 1.0 / std::log(t); }, 2.0, s);
    const double i2 = integrate([xd](double t) { return 1.0 / std::log(xd / t); }, 2.0, s);
    return i1 + i2;
}

DensityReport density_report(u64 x, RationalExponent t, u64 enumeration_cap) {
    if (x < 1) throw std::invalid_argument("density_report requires X >= 1");
    DensityReport report;
    report.x = x;
    report.t = t;

    std::vector<u64> elements;
    if (t.is_one()) {
        if (x > enumeration_cap)
            throw CapExceeded("density_report: X exceeds the enumeration cap");
        elements = s1_elements_by_blocks(x);
    } else {
        elements = enumerate_s_t(x, t, EnumerationMode::EarlyStop).elements;
    }
    report.set_size = elements.size();
    report.prime_count = count_primes_in_set(elements);

    const double ss = static_cast<double>(report.set_size);
    report.pnt_ratio =
        ss > 1.0 ? static_cast<double>(report.prime_count) * std::log(ss) / ss : 0.0;

    if (t.is_one() && x >= 2) {
        const double xd = static_cast<double>(x);
        report.hey_estimate = 4.0 * std::sqrt(xd) / std::log(xd);
        if (x >= 16) report.ma_wu_main_term = floorset::ma_wu_main_term(x);
    }
    return report;
}

} // namespace floorset
