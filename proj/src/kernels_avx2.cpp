#include "randmaj/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <limits>

// Compiled with -mavx2 only; callers reach these through the runtime dispatch
// in kernels.cpp, which checks CPU support first.

namespace randmaj::kernels::avx2 {

double min_ratio(std::span<const double> num, std::span<const double> den) {
  const std::size_t n = num.size();
  std::size_t i = 0;
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        _mm256_div_pd(_mm256_loadu_pd(num.data() + i), _mm256_loadu_pd(den.data() + i));
    best = _mm256_min_pd(best, r);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int l = 1; l < 4; ++l)
    if (lanes[l] < out) out = lanes[l];
  for (; i < n; ++i) {
    const double r = num[i] / den[i];
    if (r < out) out = r;
  }
  return out;
}

std::size_t first_violation(std::span<const double> lhs,
                            std::span<const double> rhs, double tol) {
  const std::size_t n = lhs.size();
  const __m256d vtol = _mm256_set1_pd(tol);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d bound = _mm256_sub_pd(_mm256_loadu_pd(rhs.data() + i), vtol);
    const __m256d lt = _mm256_cmp_pd(_mm256_loadu_pd(lhs.data() + i), bound, _CMP_LT_OQ);
    const int mask = _mm256_movemask_pd(lt);
    if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    if (lhs[i] < rhs[i] - tol) return i;
  }
  return n;
}

std::size_t count_nonnegative(std::span<const double> xs) {
  const std::size_t n = xs.size();
  const __m256d zero = _mm256_setzero_pd();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ge = _mm256_cmp_pd(_mm256_loadu_pd(xs.data() + i), zero, _CMP_GE_OQ);
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(ge))));
  }
  for (; i < n; ++i) count += (xs[i] >= 0.0) ? 1 : 0;
  return count;
}

void divide(std::span<double> xs, double divisor) {
  const std::size_t n = xs.size();
  const __m256d d = _mm256_set1_pd(divisor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(xs.data() + i, _mm256_div_pd(_mm256_loadu_pd(xs.data() + i), d));
  }
  for (; i < n; ++i) xs[i] /= divisor;
}

void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

}  // namespace randmaj::kernels::avx2
