#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z4rm {

// Operands of incompatible lengths (or an odd-length Gray preimage).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An (r, m) pair outside 0 <= r <= m, m >= 1.
class InvalidOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Enumeration would need more than 2^budget steps.
class CapacityError : public std::runtime_error {
public:
    CapacityError(int required, int budget)
        : std::runtime_error("enumeration needs budget " + std::to_string(required) +
                             " but the budget is " + std::to_string(budget)),
          required_(required), budget_(budget) {}

    int required() const noexcept { return required_; }
    int budget() const noexcept { return budget_; }

private:
    int required_;
    int budget_;
};

// Minimum distance of the zero code.
class UndefinedDistanceError : public std::domain_error {
public:
    UndefinedDistanceError() : std::domain_error("minimum distance of the zero code is undefined") {}
};

// A user-supplied override code whose parameters do not fit its recursion node.
class OverrideError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Search target length above the configured limit.
class LimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed code file or word; line and column are 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& what) {
        std::string s = "line " + std::to_string(line);
        if (column != 0) s += ", column " + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace z4rm
