#pragma once

// Data-parallel inner loops shared by the majorization predicates.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant picked at runtime. The variants are restricted to operations whose
// result is independent of evaluation order (elementwise arithmetic,
// comparisons, min), so all backends return bit-identical results and the
// choice of backend never changes experiment output.

#include <cstddef>
#include <span>
#include <string_view>

namespace randmaj::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

/// True when the backend was compiled in and the CPU supports it.
bool backend_available(Backend b);

/// Backend used by the dispatching entry points below. Defaults to the best
/// available one; the environment variable RANDMAJ_KERNELS=scalar forces the
/// reference path.
Backend active_backend();

/// Throws std::invalid_argument if `b` is not available.
void set_backend(Backend b);

/// min_i num[i] / den[i]. Requires equal, non-zero lengths.
double min_ratio(std::span<const double> num, std::span<const double> den);

/// Index of the first i with lhs[i] < rhs[i] - tol, or size() if none.
std::size_t first_violation(std::span<const double> lhs,
                            std::span<const double> rhs, double tol);

/// Number of entries >= 0.
std::size_t count_nonnegative(std::span<const double> xs);

/// xs[i] /= divisor.
void divide(std::span<double> xs, double divisor);

/// out[i] = a[i] - b[i].
void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out);

namespace scalar {
double min_ratio(std::span<const double> num, std::span<const double> den);
std::size_t first_violation(std::span<const double> lhs,
                            std::span<const double> rhs, double tol);
std::size_t count_nonnegative(std::span<const double> xs);
void divide(std::span<double> xs, double divisor);
void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out);
}  // namespace scalar

#if defined(RANDMAJ_HAVE_AVX2)
namespace avx2 {
double min_ratio(std::span<const double> num, std::span<const double> den);
std::size_t first_violation(std::span<const double> lhs,
                            std::span<const double> rhs, double tol);
std::size_t count_nonnegative(std::span<const double> xs);
void divide(std::span<double> xs, double divisor);
void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out);
}  // namespace avx2
#endif

}  // namespace randmaj::kernels
