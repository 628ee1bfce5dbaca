#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hirschlab {

/// Base class for recoverable errors caused by bad input (CLI exit code 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different polynomial rings") {}
};

/// Raised when an ideal that must be proper contains a unit.
class ImproperIdeal : public Error {
 public:
  using Error::Error;
  ImproperIdeal() : Error("ideal is improper (contains 1)") {}
};

/// A configurable enumeration cap was hit (CLI exit code 2).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug (CLI exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Positioned syntax error from the input parser.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {})
      : Error(format(line, column, message, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace hirschlab
