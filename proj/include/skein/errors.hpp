#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Caller broke a documented precondition (mismatched variables, arities, ...).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Arithmetic that has no answer in the ring or field at hand.
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured computation cap was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace skein
