#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpotent {

/// Base class for every error raised by the library.
///
/// `category()` is a short, stable tag ("parse", "arithmetic", ...) that the
/// command line front end prints in front of the message so diagnostics stay
/// machine-parsable.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

/// Division by zero, or a square root that does not exist in the field.
class ArithmeticError : public Error {
public:
    explicit ArithmeticError(const std::string& message) : Error("arithmetic", message) {}
};

/// Operands that live in different fields or different algebras.
class MismatchError : public Error {
public:
    explicit MismatchError(const std::string& message) : Error("mismatch", message) {}
};

/// A violated precondition (bad parameters, unsupported order, budget exceeded).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

/// Malformed literal. `position()` is the 0-based offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse", message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace kpotent
