#include "randmaj/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace randmaj::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(RANDMAJ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("RANDMAJ_KERNELS")) {
    if (std::string_view(env) == "scalar") return Backend::Scalar;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

bool use_avx2() {
#if defined(RANDMAJ_HAVE_AVX2)
  return backend_slot().load(std::memory_order_relaxed) == Backend::Avx2;
#else
  return false;
#endif
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  return b == Backend::Scalar || (b == Backend::Avx2 && cpu_has_avx2());
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::invalid_argument("kernel backend not available: " +
                                std::string(backend_name(b)));
  }
  backend_slot().store(b, std::memory_order_relaxed);
}

double min_ratio(std::span<const double> num, std::span<const double> den) {
  require_same_size(num.size(), den.size(), "min_ratio");
  if (num.empty()) throw std::invalid_argument("min_ratio: empty input");
#if defined(RANDMAJ_HAVE_AVX2)
  if (use_avx2()) return avx2::min_ratio(num, den);
#endif
  return scalar::min_ratio(num, den);
}

std::size_t first_violation(std::span<const double> lhs,
                            std::span<const double> rhs, double tol) {
  require_same_size(lhs.size(), rhs.size(), "first_violation");
#if defined(RANDMAJ_HAVE_AVX2)
  if (use_avx2()) return avx2::first_violation(lhs, rhs, tol);
#endif
  return scalar::first_violation(lhs, rhs, tol);
}

std::size_t count_nonnegative(std::span<const double> xs) {
#if defined(RANDMAJ_HAVE_AVX2)
  if (use_avx2()) return avx2::count_nonnegative(xs);
#endif
  return scalar::count_nonnegative(xs);
}

void divide(std::span<double> xs, double divisor) {
#if defined(RANDMAJ_HAVE_AVX2)
  if (use_avx2()) return avx2::divide(xs, divisor);
#endif
  scalar::divide(xs, divisor);
}

void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  require_same_size(a.size(), out.size(), "subtract");
  require_same_size(b.size(), out.size(), "subtract");
#if defined(RANDMAJ_HAVE_AVX2)
  if (use_avx2()) return avx2::subtract(a, b, out);
#endif
  scalar::subtract(a, b, out);
}

}  // namespace randmaj::kernels
