#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Bad arguments or violated preconditions at an API boundary.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No parameter choice satisfies the construction's window inequality.
class InfeasibleParams : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input to a decoder is not in the encoder's image.
class CorruptCodeword : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimated_cost)
      : std::runtime_error(what), estimated_cost_(estimated_cost) {}
  [[nodiscard]] double estimated_cost() const noexcept { return estimated_cost_; }

 private:
  double estimated_cost_;
};

}  // namespace lpa
