#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starpull {

/// Base of every exception thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct mismatched_field : error {
    mismatched_field(long d1, long d2)
        : error("mismatched discriminant tags " + std::to_string(d1) + " and " + std::to_string(d2)) {}
};

/// Raised when an instance configuration is not one of the supported pullbacks.
struct unsupported_instance : error {
    using error::error;
};

/// Raised when an operation is applied outside the domain where it is defined.
struct evaluation_error : error {
    using error::error;
};

/// Raised when a harness suite is run on an instance that violates its hypotheses.
struct precondition_error : error {
    using error::error;
};

struct parse_error : error {
    std::size_t offset;
    parse_error(std::size_t off, const std::string& msg)
        : error("syntax error at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};

} // namespace starpull
