#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bindkit {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term or index was built (or an operation was asked to produce one)
/// that violates a scope invariant.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// Operator applied to the wrong number of arguments or binder depths, or an
/// operator unknown to the signature.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Operands built over different signatures.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bindkit
