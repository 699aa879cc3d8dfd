#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sailcost {

/// Base for every error raised by the library. `code()` is the stable,
/// machine-parsable tag printed by the CLI as `code: message`.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Unknown unit tag, wrong dimension, or otherwise unusable configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("config_error", message) {}
};

/// Input outside the domain an operation is defined on.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain_error", message) {}
};

/// A result overflowed or otherwise left the finite range.
class NumericRangeError : public Error {
public:
    explicit NumericRangeError(const std::string& message)
        : Error("numeric_range_error", message) {}
};

/// Closed-form optimum does not exist (a1 = 0 or a2 = 0 puts it on a boundary).
class DegenerateOptimumError : public Error {
public:
    explicit DegenerateOptimumError(const std::string& message)
        : Error("degenerate_optimum", message) {}
};

/// No budget allocation yields a positive power, or a milestone is never reachable.
class InfeasibleError : public Error {
public:
    InfeasibleError(const std::string& message, double asymptotic_minimum = 0.0)
        : Error("infeasible", message), asymptotic_minimum_(asymptotic_minimum) {}

    /// Lowest cost the model can approach for the requested outcome (USD).
    [[nodiscard]] double asymptotic_minimum() const noexcept { return asymptotic_minimum_; }

private:
    double asymptotic_minimum_;
};

/// Scenario text that does not follow the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("parse_error", message), line_(line), column_(column) {}

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed input that violates a type invariant. Carries the field path.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error("validation_error", message), field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Unknown unit tag, or a unit whose dimension does not match the field.
class UnitError : public Error {
public:
    UnitError(std::string field, const std::string& message)
        : Error("unit_error", message), field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io_error", message) {}
};

}  // namespace sailcost
