#include "gbox/errors.hpp"

namespace gbox {

namespace {

std::string format_parse_error(const std::string& source, std::size_t line, std::size_t column,
                               const std::string& message, const std::vector<std::string>& expected) {
  std::string out = source.empty() ? std::string("<input>") : source;
  out += ':' + std::to_string(line) + ':' + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ')';
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error(format_parse_error(source, line, column, message, expected)),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

}  // namespace gbox
