#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spray {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands (or an index and its polynomial) disagree on the number of variables.
class ArityError : public Error {
public:
    ArityError(std::size_t lhs, std::size_t rhs)
        : Error("arity mismatch: " + std::to_string(lhs) + " != " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

/// A coefficient that is NaN or infinite.
class ValueError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Zero raised to a negative power during evaluation or substitution.
class SingularityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Positional combination of two unordered views with different order hashes.
class HashMismatchError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

/// Syntax error in polyform text; `position()` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Unknown variable name in polyform text.
class NameError : public Error {
public:
    using Error::Error;
};

/// A result too large to be represented exactly (knight counts above 2^53).
class OverflowError : public Error {
public:
    using Error::Error;
};

/// The dense reference implementation was asked for more cells than it allows.
class OracleCapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace spray
