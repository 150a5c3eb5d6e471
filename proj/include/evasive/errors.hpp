#pragma once

#include <stdexcept>

namespace evasive {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller-side mistakes: mixing field contexts, wrong arity.
struct UsageError : Error {
    using Error::Error;
};

/// Invalid construction parameters (duplicate generators, m not dividing n, ...).
struct ParameterError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

/// Subspace dimension exceeds what the instance supports.
struct DimensionError : Error {
    using Error::Error;
};

struct NotAMemberError : Error {
    using Error::Error;
};

/// Work-size guard tripped on an enumeration-style operation.
struct GuardExceededError : Error {
    using Error::Error;
};

/// A bounded search ran out of candidates.
struct SearchExhaustedError : Error {
    using Error::Error;
};

/// Violated internal invariant; indicates a bug or a broken instance.
struct InternalError : Error {
    using Error::Error;
};

} // namespace evasive
