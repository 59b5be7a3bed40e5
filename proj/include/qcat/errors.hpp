#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// An operation needed simplices above the declared dimension bound.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration hit its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t attempted)
      : std::runtime_error(what + " (attempted " + std::to_string(attempted) + ")"),
        attempted_(attempted) {}
  std::size_t attempted() const { return attempted_; }

 private:
  std::size_t attempted_;
};

/// Input data violates a structural requirement (bad index, bad shape, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A homotopical hypothesis needed by an operation does not hold.
class NotAQuasicategory : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcat
