#ifndef FLOORSET_RATIONAL_EXPONENT_HPP
#define FLOORSET_RATIONAL_EXPONENT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace floorset {

// Exponent t = num/den >= 1 in lowest terms. den = 1 for integer t.
// Most set operations additionally require t > 1; t = 1 is the plain
// divisor set S(X) and is accepted only where documented.
struct RationalExponent {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    // Reduces num/den and validates num/den >= 1, den >= 1.
    static RationalExponent make(std::uint64_t num, std::uint64_t den);

    // Accepts "2", "3/2", or a finite decimal like "1.5" (converted
    // exactly). Anything else, including mantissas past 18 digits,
    // is rejected.
    static RationalExponent parse(std::string_view text);

    bool is_one() const { return num == 1 && den == 1; }
    bool greater_than_one() const { return num > den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const RationalExponent&, const RationalExponent&) = default;
};

} // namespace floorset

#endif
