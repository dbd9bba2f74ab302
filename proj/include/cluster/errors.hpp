#pragma once

#include <stdexcept>
#include <string>

namespace cluster {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data: malformed files, invalid seeds, violated preconditions
// that the caller controls.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// API misuse: mutating a frozen vertex, mismatched truncation orders, ...
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// A structural fact the theory guarantees failed to hold.  Seeing one of
// these means a bug, not bad input.
struct InvariantError : Error {
    explicit InvariantError(const std::string& msg) : Error(msg) {}
};

// A pointed-family provider broke its contract (element not pointed at the
// requested degree, deformation key outside the factor, coverage gap).
struct FamilyError : Error {
    explicit FamilyError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Integer overflow in exact arithmetic.
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

} // namespace cluster
