#pragma once

// Deterministic majorization predicates on sorted probability vectors.
//
// Orientation: majorizes(x, y) is true iff x is majorized by y (x < y), i.e.
// a pure state with diagonal x can be converted into one with diagonal y by
// incoherent operations. Comparisons run on suffix sums (sums of the smallest
// components), which is the prefix-sum definition rewritten via normalization.

#include <cstddef>
#include <span>
#include <vector>

#include "randmaj/chain.hpp"
#include "randmaj/prob_vector.hpp"

namespace randmaj {

/// Absolute tolerance per suffix-sum comparison. Ties resolve to "comparable".
inline constexpr double kMajorizationTol = 1e-12;
/// Absolute tolerance on the bridge endpoint S_n.
inline constexpr double kBridgeTol = 1e-10;

/// Partial sums S_1..S_n of the differences y_desc - x_desc; S_n = 0.
struct BridgeWalk {
  std::vector<double> partial_sums;
  std::size_t n() const { return partial_sums.size(); }
};

bool majorizes(const SortedProbVector& x, const SortedProbVector& y);

/// Maximal probability of converting x into y: min_k suffix_x[k] / suffix_y[k].
/// Returns exactly 1 iff majorizes(x, y). Throws ZeroDenominator when y has a
/// zero component, DimensionMismatch on unequal sizes.
double conversion_probability(const SortedProbVector& x, const SortedProbVector& y);

BridgeWalk bridge_walk(const SortedProbVector& x, const SortedProbVector& y);

/// #{k : S_k >= 0}; exact zeros count as above the origin.
std::size_t time_above_origin(const BridgeWalk& w);

/// min_{k <= k_max} (V_1+...+V_k) / (V'_1+...+V'_k). The raw infimum is
/// returned without clamping, so truncated values above 1 are possible.
/// Throws DomainError when k_max is 0 or exceeds either chain's length.
double pi_infinity(const ChainSample& v, const ChainSample& v_prime, std::size_t k_max);

/// Span-level forms operating directly on suffix-sum arrays, as produced by
/// sort_with_suffix_sums. The object-level functions above delegate here.
namespace suffix {

bool majorizes(std::span<const double> sx, std::span<const double> sy);

/// The k conditions involving the k smallest components, i.e. the last k
/// suffix sums. k = n is full majorization.
bool majorizes_smallest(std::span<const double> sx, std::span<const double> sy,
                        std::size_t k);

double conversion_probability(std::span<const double> sx, std::span<const double> sy);

/// Writes S_1..S_n into `out` (size n). S_k is evaluated as
/// suffix_x[k+1] - suffix_y[k+1], which equals the partial sum of
/// y_desc - x_desc by normalization and makes S_n exactly zero.
void bridge_walk(std::span<const double> sx, std::span<const double> sy,
                 std::span<double> out);

}  // namespace suffix

}  // namespace randmaj
