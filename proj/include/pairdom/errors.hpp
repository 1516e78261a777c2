#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairdom {

/// Malformed text input. `line()` is 1-based, 0 when the problem is not tied
/// to a single line (e.g. a missing edge line at end of file).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// The instance is well formed but outside the class a routine accepts
/// (disconnected, not a block graph, has an isolated vertex, ...).
class InstanceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to go beyond its configured budget.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments violating a documented precondition.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace pairdom
