#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codegree {

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed hypergraph text. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A mathematical invariant failed. Always a bug in this library.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace codegree
