#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyrel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or shape disagreement between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operands defined over different prime fields.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented input requirement does not hold (singular matrix, degree
/// bound violated, matrix not in the required form, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polyrel
