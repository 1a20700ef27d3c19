#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside the domain of an operation (λ ≤ 0, malformed IFN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An IFF produced a component pair that is not an IFN.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A derivative formula hit a denominator within tolerance of zero.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Two endpoints coincide in a component where a difference quotient is needed.
class DegenerateIntervalError : public Error {
 public:
  using Error::Error;
};

/// An operation's stated precondition does not hold for its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The bracketing solver found no sign change, or did not reach tolerance.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// Mixed IFN/IFF expression that the algebra does not define.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (trend CSV and the like).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax or literal error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ifc
