#pragma once

#include <stdexcept>
#include <string>

namespace dcamb {

// Raised when a structural invariant that the construction guarantees fails
// to hold. Seeing one of these means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Raised when a bounded enumeration (e.g. the seed BFS) exceeds its budget.
class ResourceExhausted : public std::runtime_error {
 public:
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dcamb
