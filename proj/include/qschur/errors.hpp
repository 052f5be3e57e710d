#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

// Raised when an internal invariant is violated (a bug, not a usage error).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Raised on invalid arguments or precondition violations at the public API.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation is not supported for the requested backend,
// e.g. radical computation over a finite field.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}
