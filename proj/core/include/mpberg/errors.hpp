#pragma once

#include <stdexcept>
#include <string>

namespace mpberg {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or squareness violations.
struct DimensionError : Error {
    using Error::Error;
};

// Operation requires a nonsingular matrix.
struct SingularMatrixError : Error {
    using Error::Error;
};

// Degenerate input: zero vector, zero row, empty domain.
struct DegenerateInputError : Error {
    using Error::Error;
};

// The defining matrix fails the boundedness criterion; the message carries
// the diagnosis (which condition failed and where).
struct UnboundedDomainError : Error {
    using Error::Error;
};

// A point sits on a coordinate axis (or too close to one) where a
// fractional-power branch cannot be chosen.
struct BranchError : Error {
    using Error::Error;
};

// A mathematical precondition on values failed (zero raised to a negative
// power, norm requested for a non-integrable monomial, point outside domain).
struct DomainError : Error {
    using Error::Error;
};

// A bounded search ran past its configured cap; the cap is in the message.
struct SearchExhaustedError : Error {
    using Error::Error;
};

// Monte-Carlo estimate is unusable (no accepted samples).
struct DegenerateEstimateError : Error {
    using Error::Error;
};

// Malformed user input (CLI flags, spec files, number strings).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace mpberg
