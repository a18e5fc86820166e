#pragma once

#include <stdexcept>
#include <string>

namespace randmaj {

/// Two vectors (or chains) that must share a dimension do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// A suffix sum of the target vector is zero, so the conversion ratio is undefined.
class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input outside the domain of a function (k out of range, F(x) = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Values that do not form a probability vector.
class InvalidProbVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace randmaj
