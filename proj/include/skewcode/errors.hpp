#ifndef SKEWCODE_ERRORS_HPP
#define SKEWCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewcode {

// Malformed input: bad grammar, mismatched fields, zero divisor, ...
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical hypothesis: t does not divide n, gcd(n,q) != 1, ...
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource limit was hit (field size, enumeration count, ...).
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace skewcode

#endif
