#pragma once

#include <stdexcept>
#include <string>

namespace ncdissect {

// Parameters outside the domain of a formula or enumerator.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally malformed input object (bad code, bad collection, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A property that holds for every valid input was violated at runtime.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration or oracle was asked for more than the configured limit.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncdissect
