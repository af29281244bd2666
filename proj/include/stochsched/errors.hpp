#pragma once

#include <stdexcept>
#include <string>

namespace stochsched {

// Instance/realization content is invalid or an argument is out of range.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap (instance size, enumeration size) was exceeded.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A distribution kind is not supported by the requested operation.
struct UnsupportedDistributionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Preprocessing cannot normalize the instance (e.g. all-zero expectation).
struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stochsched
