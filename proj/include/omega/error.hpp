#pragma once

#include <stdexcept>
#include <string>

namespace omega {

// Malformed input: unknown identifiers, ill-typed compositions, bad JSON shapes.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or exhaustive check would exceed its configured bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-point iteration observed a set that grew between steps.
class NonMonotone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace omega
