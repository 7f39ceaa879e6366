#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glueform {

// Caller violated a precondition (context mismatch, arity mismatch, bad index).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input. `position` is a 1-based column for expressions
// and a 1-based line number for files; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when an identity that holds by construction fails. Indicates an
// engine bug, never bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace glueform
