#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqring {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different fields, rings, or variable counts.
class SpecMismatchError : public Error {
public:
    using Error::Error;
};

/// Inversion of zero or division by the zero polynomial.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// An enumeration-based operation would exceed its documented size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A precondition on mathematical inputs was violated (empty point set,
/// point not in S, zero gcd input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested object provably does not exist (exit code 1 in the CLI,
/// as opposed to malformed input which is exit code 2).
class NegativeResultError : public Error {
public:
    using Error::Error;
};

/// certify() called on a non-member.
class NonMemberError : public NegativeResultError {
public:
    using NegativeResultError::NegativeResultError;
};

/// unit_certificate() called on a proper ideal.
class ProperIdealError : public NegativeResultError {
public:
    using NegativeResultError::NegativeResultError;
};

/// Text input rejected by a parser; `position` is a 0-based offset into the
/// source string (or a line number for line-oriented files).
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace fqring
