#pragma once

#include <stdexcept>
#include <string>

namespace stabrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (file header, matrix body).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A list or run set breaks its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arguments are individually valid but incompatible (k out of range,
/// metric applied to the wrong list kind, mismatched lengths, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is undefined for these inputs (zero normalizer,
/// infinite divergence, eigensolver failure).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace stabrank
