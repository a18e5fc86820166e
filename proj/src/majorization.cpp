#include "randmaj/majorization.hpp"

#include <string>

#include "randmaj/errors.hpp"
#include "randmaj/kernels.hpp"

namespace randmaj {

namespace suffix {
namespace {

void require_same_dim(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}

}  // namespace

bool majorizes(std::span<const double> sx, std::span<const double> sy) {
  require_same_dim(sx, sy);
  return kernels::first_violation(sx, sy, kMajorizationTol) == sx.size();
}

bool majorizes_smallest(std::span<const double> sx, std::span<const double> sy,
                        std::size_t k) {
  require_same_dim(sx, sy);
  if (k > sx.size()) throw DomainError("condition count exceeds dimension");
  const std::size_t first = sx.size() - k;
  return kernels::first_violation(sx.subspan(first), sy.subspan(first), kMajorizationTol) == k;
}

double conversion_probability(std::span<const double> sx, std::span<const double> sy) {
  require_same_dim(sx, sy);
  if (sy.empty()) throw DomainError("empty vectors");
  // suffix sums are non-increasing, so the last one is the smallest
  if (!(sy.back() > 0.0)) {
    throw ZeroDenominator("target vector has a zero component");
  }
  if (majorizes(sx, sy)) return 1.0;
  return kernels::min_ratio(sx, sy);
}

void bridge_walk(std::span<const double> sx, std::span<const double> sy,
                 std::span<double> out) {
  require_same_dim(sx, sy);
  if (out.size() != sx.size()) throw DimensionMismatch(out.size(), sx.size());
  const std::size_t n = sx.size();
  if (n == 0) return;
  kernels::subtract(sx.subspan(1), sy.subspan(1), out.first(n - 1));
  out[n - 1] = 0.0;
}

}  // namespace suffix

bool majorizes(const SortedProbVector& x, const SortedProbVector& y) {
  return suffix::majorizes(x.suffix_sums(), y.suffix_sums());
}

double conversion_probability(const SortedProbVector& x, const SortedProbVector& y) {
  return suffix::conversion_probability(x.suffix_sums(), y.suffix_sums());
}

BridgeWalk bridge_walk(const SortedProbVector& x, const SortedProbVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  BridgeWalk w{std::vector<double>(x.size())};
  suffix::bridge_walk(x.suffix_sums(), y.suffix_sums(), w.partial_sums);
  return w;
}

std::size_t time_above_origin(const BridgeWalk& w) {
  return kernels::count_nonnegative(w.partial_sums);
}

double pi_infinity(const ChainSample& v, const ChainSample& v_prime, std::size_t k_max) {
  if (k_max == 0) throw DomainError("k_max must be at least 1");
  if (k_max > v.size() || k_max > v_prime.size()) {
    throw DomainError("k_max " + std::to_string(k_max) + " exceeds chain length");
  }
  std::vector<double> num(k_max);
  std::vector<double> den(k_max);
  double a = 0.0;
  double b = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) {
    a += v.values()[k];
    b += v_prime.values()[k];
    num[k] = a;
    den[k] = b;
  }
  return kernels::min_ratio(num, den);
}

}  // namespace randmaj
