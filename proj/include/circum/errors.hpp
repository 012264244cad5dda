#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circum {

/// Bad argument to a library call (vertex id out of range, invalid params).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a configured capacity (solver size limits, enumeration budgets).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantity that is undefined for the given input (e.g. min degree of the empty graph).
class UndefinedValueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation requires circumference >= 3.
class DegenerateCircumferenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace circum
