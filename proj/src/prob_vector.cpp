#include "randmaj/prob_vector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "randmaj/errors.hpp"

namespace randmaj {
namespace {

// Neumaier-compensated sum; only used for validation.
double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidProbVector("probability vector must be non-empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw InvalidProbVector("entry " + std::to_string(i) +
                              " is negative or not finite");
    }
  }
  const double total = compensated_sum(values_);
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw InvalidProbVector("entries sum to " + std::to_string(total) + ", expected 1");
  }
}

ProbVector ProbVector::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidProbVector("weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidProbVector("weights sum to zero");
  for (double& w : weights) w /= total;
  return ProbVector(std::move(weights));
}

void sort_with_suffix_sums(std::span<double> values, std::span<double> suffix) {
  if (values.size() != suffix.size()) throw DimensionMismatch(values.size(), suffix.size());
  std::sort(values.begin(), values.end(), std::greater<>());
  double acc = 0.0;
  for (std::size_t i = values.size(); i-- > 0;) {
    acc += values[i];
    suffix[i] = acc;
  }
}

SortedProbVector::SortedProbVector(const ProbVector& x)
    : values_desc_(x.values().begin(), x.values().end()),
      suffix_sums_(x.size()) {
  sort_with_suffix_sums(values_desc_, suffix_sums_);
}

SortedProbVector sort_desc(const ProbVector& x) { return SortedProbVector(x); }

}  // namespace randmaj
