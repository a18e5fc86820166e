#include "randmaj/kernels.hpp"

#include <limits>

namespace randmaj::kernels::scalar {

double min_ratio(std::span<const double> num, std::span<const double> den) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < num.size(); ++i) {
    const double r = num[i] / den[i];
    if (r < best) best = r;
  }
  return best;
}

std::size_t first_violation(std::span<const double> lhs,
                            std::span<const double> rhs, double tol) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] < rhs[i] - tol) return i;
  }
  return lhs.size();
}

std::size_t count_nonnegative(std::span<const double> xs) {
  std::size_t count = 0;
  for (double x : xs) count += (x >= 0.0) ? 1 : 0;
  return count;
}

void divide(std::span<double> xs, double divisor) {
  for (double& x : xs) x /= divisor;
}

void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
}

}  // namespace randmaj::kernels::scalar
