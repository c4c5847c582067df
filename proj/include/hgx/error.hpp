#pragma once

#include <stdexcept>
#include <string>

namespace hgx {

/// Raised when an operation is called outside its documented parameter range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input is too large for an exact small-instance algorithm.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hgx
