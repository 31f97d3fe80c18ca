#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkm {

/// Base of every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A moment graph failed one of the structural checks.
class ValidationError : public Error {
 public:
  ValidationError(std::string check, const std::string& message)
      : Error(check + ": " + message), check_(std::move(check)) {}

  [[nodiscard]] const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// A linear system that must have a solution does not.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkm
