#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label)
        : Error("unknown basis label '" + label + "'"), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class OverflowDetected : public Error {
public:
    OverflowDetected() : Error("integer overflow in ring arithmetic") {}
};

/// A product needed by an operation is marked Unknown in a partial ring.
class UnknownProduct : public Error {
public:
    UnknownProduct(const std::string& a, const std::string& b)
        : Error("product " + a + "*" + b + " is Unknown"), left_(a), right_(b) {}
    const std::string& left() const noexcept { return left_; }
    const std::string& right() const noexcept { return right_; }

private:
    std::string left_;
    std::string right_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SemanticError : public Error {
public:
    using Error::Error;
};

class NotIntegral : public Error {
public:
    using Error::Error;
};

class OrthogonalityFailure : public Error {
public:
    using Error::Error;
};

class RankTooLarge : public Error {
public:
    RankTooLarge(std::size_t rank, std::size_t bound)
        : Error("rank " + std::to_string(rank) + " exceeds the enumeration bound " + std::to_string(bound)) {}
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class NotDegreeThree : public Error {
public:
    explicit NotDegreeThree(const std::string& label)
        : Error("basis element '" + label + "' does not have degree 3") {}
};

class PreconditionUnmet : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace fusionring
