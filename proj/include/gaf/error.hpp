#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaf {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identifier (axis, chamber, node id) that does not exist in its container.
class UnknownIdentifier : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition that is not a diagram-validity problem
/// (depth 0, unrealizable chamber type passed directly, bad bounds).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refuses inputs above its configured vertex bound.
class SizeBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// random_diagram could not find a valid diagram for the requested shape.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// Located failure while reading GAF text or JSON.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::string expected = {})
      : Error(format(line, column, message, expected)),
        line_(line),
        column_(column),
        detail_(std::move(message)),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message,
                            const std::string& expected) {
    std::string s = "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message;
    if (!expected.empty()) s += " (expected " + expected + ")";
    return s;
  }

  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::string expected_;
};

}  // namespace gaf
