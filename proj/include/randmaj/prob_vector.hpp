#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace randmaj {

/// Relative tolerance on the total mass of a probability vector.
inline constexpr double kNormalizationTol = 1e-12;

/// A point of the unit simplex: non-negative entries summing to one.
class ProbVector {
 public:
  /// Throws InvalidProbVector on empty input, negative or non-finite entries,
  /// or a total outside 1 +- kNormalizationTol.
  explicit ProbVector(std::vector<double> values);

  /// Divides non-negative weights by their sum.
  static ProbVector normalized(std::vector<double> weights);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// Decreasing rearrangement of a ProbVector together with its suffix sums
/// suffix_sums()[k] = sum_{j >= k} values_desc()[j] (0-based).
class SortedProbVector {
 public:
  explicit SortedProbVector(const ProbVector& x);

  std::span<const double> values_desc() const { return values_desc_; }
  std::span<const double> suffix_sums() const { return suffix_sums_; }
  std::size_t size() const { return values_desc_.size(); }

 private:
  std::vector<double> values_desc_;
  std::vector<double> suffix_sums_;
};

SortedProbVector sort_desc(const ProbVector& x);

/// Sorts `values` in place into non-increasing order and writes the suffix
/// sums, accumulated from the smallest entry upward, into `suffix`.
/// Shared by SortedProbVector and the experiment hot loops so both produce
/// identical bits.
void sort_with_suffix_sums(std::span<double> values, std::span<double> suffix);

}  // namespace randmaj
