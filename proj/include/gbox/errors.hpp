#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbox {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Variable typing problems: unbound variables, type mismatches, unsafe generators.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// A node, enumeration or tableau-call budget was exhausted before a verdict.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace gbox
