#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

enum class ErrorKind {
  VarSetMismatch,
  UnknownVariable,
  ExponentOverflow,
  NotDivisible,
  DivisionByZero,
  NotHomogeneous,
  NotHarmonic,
  DegreeMismatch,
  NotWeaklyCayley,
  MultipleOfQ,
  NotALine,
  DegenerateQuadric,
  DegenerateSpan,
  DegenerateCurve,
  NotACurve,
  EmptyCurve,
  BudgetExceeded,
  InvalidArgument,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

// All library failures are reported through this type; `kind()` identifies the
// failing contract so callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cayley
