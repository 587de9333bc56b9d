#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simlab {

// Root of every error raised by the library. Callers that only need to
// report a failure can catch this; the subclasses exist so tests and the
// CLI can tell the categories apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value, map, or encoding was used with the wrong domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A partial map whose descriptor cannot be evaluated.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

// Text input (terms, programs, values, scenarios) that does not parse.
// Positions are 1-based; zero means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

// A configured search or size bound was exceeded (Ackermann safety bound,
// diagonal search bound, ...).
class BoundError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: malformed programs, models, scenarios.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace simlab
