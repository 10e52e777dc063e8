#pragma once

#include <stdexcept>
#include <string>

namespace descent {

/// Malformed or out-of-domain input (bad composition, non-prime modulus, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a size bound that exists only to keep runtimes sane.
/// Callers may relax these bounds explicitly (`force`), never correctness checks.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verification clause that should hold mathematically failed to check out.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the representable range.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace descent
