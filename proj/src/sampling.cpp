#include "randmaj/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "randmaj/kernels.hpp"

namespace randmaj {
namespace {

void normalize_in_place(std::span<double> xs) {
  double total = 0.0;
  for (double x : xs) total += x;
  kernels::divide(xs, total);
}

}  // namespace

DirichletParam::DirichletParam(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("Dirichlet alpha must be positive and finite");
  }
}

double exponential_from_uniform(double u) { return -std::log1p(-u); }

double sample_exponential(RngStream& rng) {
  return exponential_from_uniform(rng.next_uniform());
}

void fill_exponentials(std::span<double> out, RngStream& rng) {
  for (double& x : out) x = sample_exponential(rng);
}

std::vector<double> sample_exponentials(std::size_t k, RngStream& rng) {
  if (k == 0) throw std::invalid_argument("sample_exponentials: k must be at least 1");
  std::vector<double> out(k);
  fill_exponentials(out, rng);
  return out;
}

double sample_standard_normal(RngStream& rng) {
  // Marsaglia polar method; the second variate is discarded
  for (;;) {
    const double a = 2.0 * rng.next_uniform() - 1.0;
    const double b = 2.0 * rng.next_uniform() - 1.0;
    const double s = a * a + b * b;
    if (s > 0.0 && s < 1.0) return a * std::sqrt(-2.0 * std::log(s) / s);
  }
}

namespace {

double gamma_at_least_one(double shape, RngStream& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = sample_standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// log of a Gamma(shape < 1) draw; the U^(1/shape) factor underflows easily.
double log_gamma_below_one(double shape, RngStream& rng) {
  const double g = gamma_at_least_one(shape + 1.0, rng);
  return std::log(g) + std::log(rng.next_uniform()) / shape;
}

}  // namespace

double sample_gamma(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
  if (shape == 1.0) return sample_exponential(rng);
  if (shape > 1.0) return gamma_at_least_one(shape, rng);
  return std::exp(log_gamma_below_one(shape, rng));
}

void fill_uniform_simplex(std::span<double> out, RngStream& rng) {
  if (out.empty()) throw std::invalid_argument("simplex dimension must be at least 1");
  fill_exponentials(out, rng);
  normalize_in_place(out);
}

ProbVector sample_uniform_simplex(std::size_t n, RngStream& rng) {
  std::vector<double> values(n);
  fill_uniform_simplex(values, rng);
  return ProbVector(std::move(values));
}

void fill_dirichlet(std::span<double> out, DirichletParam p, RngStream& rng) {
  if (out.empty()) throw std::invalid_argument("simplex dimension must be at least 1");
  const double alpha = p.alpha();
  if (alpha == 1.0) {
    fill_uniform_simplex(out, rng);
    return;
  }
  if (alpha > 1.0) {
    for (double& x : out) x = gamma_at_least_one(alpha, rng);
    normalize_in_place(out);
    return;
  }
  for (double& x : out) x = log_gamma_below_one(alpha, rng);
  const double top = *std::max_element(out.begin(), out.end());
  for (double& x : out) x = std::exp(x - top);
  normalize_in_place(out);
}

ProbVector sample_dirichlet(std::size_t n, DirichletParam p, RngStream& rng) {
  std::vector<double> values(n);
  fill_dirichlet(values, p, rng);
  return ProbVector(std::move(values));
}

}  // namespace randmaj
