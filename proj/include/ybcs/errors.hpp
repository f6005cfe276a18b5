#pragma once

#include <stdexcept>
#include <string>

namespace ybcs {

// Malformed or axiom-violating input data. Carries a human-readable
// diagnostic naming the first violation in deterministic order.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// A property the theory guarantees failed to hold. Always a bug, never
// a property of the input.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(std::string msg) : std::logic_error(std::move(msg)) {}
};

// A closure or search exceeded its configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace ybcs
