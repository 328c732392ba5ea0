#pragma once

#include <stdexcept>
#include <string>

namespace alexg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape/size mismatches (non-square determinant, bad embed slots, ...).
struct DimensionError : Error {
    using Error::Error;
};

// Operands from incompatible contexts (leg sets, truncations).
struct ContextError : Error {
    using Error::Error;
};

// Input outside an operation's domain (matrix not unipotent mod u, ...).
struct DomainError : Error {
    using Error::Error;
};

// Division by zero and friends.
struct ArithmeticError : Error {
    using Error::Error;
};

// Degenerate input such as normalizing the zero polynomial.
struct DegenerateError : Error {
    using Error::Error;
};

// Odd exponent where only even ones can occur.
struct ParityError : Error {
    using Error::Error;
};

// A contraction hit a non-invertible 1 - gamma (or Det(1 - W) = 0).
struct SingularError : Error {
    using Error::Error;
};

// Crossing-list labels do not form a valid diagram.
struct LabelingError : Error {
    using Error::Error;
};

// Malformed textual/JSON input.
struct ParseError : Error {
    using Error::Error;
};

// Twist element fails its commutation precondition.
struct TwistError : Error {
    using Error::Error;
};

} // namespace alexg
