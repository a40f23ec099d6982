#pragma once

#include <stdexcept>

namespace robin {

// Input outside an operation's contract (n = 0, even where odd required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A PrimeTable or sieve does not cover the requested range.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An adaptive comparison hit its precision cap without separating.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robin
