#pragma once

#include <stdexcept>
#include <string>

namespace teven {

// Caller bug: argument outside the documented range.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain (e.g. k < n).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Request exceeds a configured capacity cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// Weight polynomial is not symmetric; `transposition` is the index i of the
// adjacent swap (i, i+1), 1-based, under which it fails.
struct SymmetryError : std::runtime_error {
    SymmetryError(const std::string& msg, int transposition_)
        : std::runtime_error(msg), transposition(transposition_) {}
    int transposition;
};

}  // namespace teven
