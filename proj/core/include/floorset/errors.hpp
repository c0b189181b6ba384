#ifndef FLOORSET_ERRORS_HPP
#define FLOORSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floorset {

// Thrown when an enumeration would exceed its evaluation cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when f'(y) = +/-1 has no root in (1, X).
class NoCriticalPoint : public std::runtime_error {
public:
    explicit NoCriticalPoint(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for preset names this library does not know.
class UnknownPreset : public std::invalid_argument {
public:
    explicit UnknownPreset(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace floorset

#endif
