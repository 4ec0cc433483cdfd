#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphbench {

enum class ErrorKind {
  InvalidArgument,
  Capacity,
  File,
  Parse,
  Validation,
  Bounds,
  Domain,
  Integrity,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace graphbench
