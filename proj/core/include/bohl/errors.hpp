#pragma once

#include <stdexcept>
#include <string>

namespace bohl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

class NotAUnitError : public Error {
public:
    explicit NotAUnitError(const std::string& what = "function is not a unit") : Error(what) {}
};

/// Raised when an operation would need a scalar outside the Gaussian-rational
/// coefficient field (e.g. multiplying a coefficient by a formal frequency
/// generator).
class UnrepresentableError : public Error {
public:
    using Error::Error;
};

/// Tuple-length or substitution-arity mismatch.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Violated precondition on otherwise well-formed input.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotStrictlyProperError : public DomainError {
public:
    explicit NotStrictlyProperError(
        const std::string& what = "rational function is not strictly proper")
        : DomainError(what) {}
};

class UnboundGeneratorError : public Error {
public:
    explicit UnboundGeneratorError(const std::string& generator)
        : Error("generator '" + generator + "' is not bound to a numeric value"),
          generator_(generator) {}
    const std::string& generator() const { return generator_; }

private:
    std::string generator_;
};

class BindingError : public Error {
public:
    using Error::Error;
};

/// Windowed search failed at the current grid resolution.
class SearchResolutionError : public Error {
public:
    using Error::Error;
};

/// Syntax error with source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Expression parsed but is not representable as a Bohl function.
class LoweringError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON interchange data.
class JsonError : public Error {
public:
    using Error::Error;
};

}  // namespace bohl
