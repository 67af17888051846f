#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conekit {

/// Base of every error raised by the toolkit. `code()` is a stable
/// kebab-case identifier suitable for machine consumption.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Invalid input or a violated precondition (CLI exit code 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded (CLI exit code 2).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Input text did not conform to the DSL grammar.
class ParseError : public DomainError {
 public:
  ParseError(std::string code, const std::string& message, std::size_t line,
             std::size_t column)
      : DomainError(std::move(code), message + " at " + std::to_string(line) +
                                         ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace conekit
