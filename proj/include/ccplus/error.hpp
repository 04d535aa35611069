#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccplus {

// Base for every error raised by the library. The CLI maps ParseError to exit
// code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed signature declarations: duplicate names, empty or duplicate
// domain values, unknown constants or values.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its stated precondition (non-definite
// theory passed to completion, elimination conditions violated, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that fails a semantic check during schema expansion or
// query dispatch.
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccplus
