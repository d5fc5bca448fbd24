#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twocat {

/// Raised when operands do not compose: dimension, object or 1-morphism
/// mismatches.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an inverse is requested for a non-invertible matrix or
/// 2-morphism.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace twocat
