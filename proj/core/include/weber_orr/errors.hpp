#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace weber_orr {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (x <= 0, z <= 1, log of a negative...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Parameter combination for which the requested representation does not exist.
class ParameterError : public Error {
public:
    using Error::Error;
};

// A named constraint of a case, config or theorem hypothesis was violated.
class ConstraintError : public ParameterError {
public:
    ConstraintError(std::string constraint, std::string detail)
        : ParameterError("constraint violated: " + constraint +
                         (detail.empty() ? std::string() : " (" + detail + ")")),
          constraint_(std::move(constraint)),
          detail_(std::move(detail)) {}

    const std::string& constraint() const noexcept { return constraint_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string constraint_;
    std::string detail_;
};

// An integral does not exist (or cannot be resolved) at the requested endpoint.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// A contour integrand did not decay enough before the maximum truncation height.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Syntax or identifier error in a function expression; offset is 0-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Domain error raised while evaluating a parsed expression.
class EvalError : public DomainError {
public:
    EvalError(const std::string& message, std::size_t offset)
        : DomainError(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace weber_orr
