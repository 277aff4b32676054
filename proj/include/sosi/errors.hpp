#pragma once

#include <stdexcept>
#include <string>

namespace sosi {

// Bad caller input: malformed graphs, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A post-condition that the mathematics guarantees did not hold. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration refused to run past its configured limits.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sosi
