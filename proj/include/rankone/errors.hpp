#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Invalid parameters or labels supplied by a caller.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A combination the library deliberately does not cover (e.g. SO(2,1) recurrences).
struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rankone
