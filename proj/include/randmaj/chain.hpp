#pragma once

#include <span>
#include <vector>

namespace randmaj {

/// Realization of the first k points of the limiting chains of rescaled
/// extreme components: V (Poisson process, exponential spacings, smallest
/// components) or W (minus log of a Poisson process, largest components).
class ChainSample {
 public:
  enum class Kind { V, W };

  /// Throws std::invalid_argument when the values violate the kind's
  /// monotonicity (V strictly increasing and positive, W strictly decreasing).
  ChainSample(Kind kind, std::vector<double> values);

  Kind kind() const { return kind_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  Kind kind_;
  std::vector<double> values_;
};

}  // namespace randmaj
