#include "randmaj/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "randmaj/errors.hpp"
#include "randmaj/sampling.hpp"

namespace randmaj {
namespace {

double log_factorial(std::size_t m) { return std::lgamma(static_cast<double>(m) + 1.0); }

// exponent * log(base), with 0 * log(0) taken as 0.
// Returns -inf when base is 0 and the exponent positive.
double log_power(double base, std::size_t exponent) {
  if (exponent == 0) return 0.0;
  if (base <= 0.0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(exponent) * std::log(base);
}

void check_rank(std::size_t n, std::size_t k, bool allow_k_equal_n) {
  if (k < 1 || k > n || (!allow_k_equal_n && k == n)) {
    throw DomainError("order statistic index " + std::to_string(k) +
                      " out of range for n = " + std::to_string(n));
  }
}

bool non_increasing(std::span<const double> xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] > xs[i - 1]) return false;
  return true;
}

// n!/(n-k)! * prod f(x_j) * tail^{n-k}, evaluated in log space.
double joint_top_bottom(std::size_t n, std::size_t k, const BaseDistribution& d,
                        std::span<const double> xs, double tail) {
  if (xs.size() != k || k < 1 || k > n) {
    throw DomainError("expected 1 <= k <= n points");
  }
  if (!non_increasing(xs)) return 0.0;
  double log_val = log_factorial(n) - log_factorial(n - k) + log_power(tail, n - k);
  double prod = 1.0;
  for (double x : xs) prod *= d.pdf(x);
  if (prod == 0.0) return 0.0;
  return prod * std::exp(log_val);
}

}  // namespace

BaseDistribution BaseDistribution::exponential() {
  return {exponential_cdf, [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); }};
}

BaseDistribution BaseDistribution::uniform01() {
  return {[](double x) { return std::clamp(x, 0.0, 1.0); },
          [](double x) { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; }};
}

double exponential_cdf(double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); }

double gumbel_cdf(double w) { return std::exp(-std::exp(-w)); }

double density_order_stat(std::size_t n, std::size_t k, const BaseDistribution& d, double x) {
  check_rank(n, k, true);
  const double f = d.pdf(x);
  if (f == 0.0) return 0.0;
  const double F = d.cdf(x);
  const double log_val = log_factorial(n) - log_factorial(n - k) - log_factorial(k - 1) +
                         log_power(F, n - k) + log_power(1.0 - F, k - 1);
  return f * std::exp(log_val);
}

double joint_density_top(std::size_t n, std::size_t k, const BaseDistribution& d,
                         std::span<const double> xs) {
  if (xs.empty()) throw DomainError("expected 1 <= k <= n points");
  return joint_top_bottom(n, k, d, xs, d.cdf(xs.back()));
}

double joint_density_bottom(std::size_t n, std::size_t k, const BaseDistribution& d,
                            std::span<const double> xs) {
  if (xs.empty()) throw DomainError("expected 1 <= k <= n points");
  return joint_top_bottom(n, k, d, xs, 1.0 - d.cdf(xs.front()));
}

double transition_cdf_top(std::size_t n, std::size_t k, const BaseDistribution& d,
                          double y, double x) {
  check_rank(n, k, false);
  const double Fx = d.cdf(x);
  if (!(Fx > 0.0)) throw DomainError("transition from a point with F(x) = 0");
  if (y >= x) return 1.0;
  return std::pow(d.cdf(y) / Fx, static_cast<double>(n - k));
}

double transition_cdf_bottom(std::size_t n, std::size_t k, const BaseDistribution& d,
                             double y, double x) {
  check_rank(n, k, false);
  const double Sx = 1.0 - d.cdf(x);
  if (!(Sx > 0.0)) throw DomainError("transition from a point with F(x) = 1");
  if (y <= x) return 0.0;
  return 1.0 - std::pow((1.0 - d.cdf(y)) / Sx, static_cast<double>(n - k));
}

ChainSample v_chain_from_spacings(std::span<const double> spacings) {
  std::vector<double> values(spacings.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < spacings.size(); ++j) {
    acc += spacings[j];
    values[j] = acc;
  }
  return ChainSample(ChainSample::Kind::V, std::move(values));
}

ChainSample w_chain_from_spacings(std::span<const double> spacings) {
  std::vector<double> values(spacings.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < spacings.size(); ++j) {
    acc += spacings[j];
    values[j] = -std::log(acc);
  }
  return ChainSample(ChainSample::Kind::W, std::move(values));
}

ChainSample sample_v_chain(std::size_t k, RngStream& rng) {
  return v_chain_from_spacings(sample_exponentials(k, rng));
}

ChainSample sample_w_chain(std::size_t k, RngStream& rng) {
  return w_chain_from_spacings(sample_exponentials(k, rng));
}

double joint_density_v(std::span<const double> vs) {
  if (vs.empty()) return 0.0;
  if (vs.front() < 0.0) return 0.0;
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i] < vs[i - 1]) return 0.0;
  return std::exp(-vs.back());
}

double joint_density_w(std::span<const double> ws) {
  if (ws.empty()) return 0.0;
  if (!non_increasing(ws)) return 0.0;
  double exponent = -std::exp(-ws.back());
  for (double w : ws) exponent -= w;
  return std::exp(exponent);
}

MinComponentStats min_component_stats(std::size_t n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  const double m = static_cast<double>(n);
  MinComponentStats s;
  s.density = [m](double x) {
    if (x < 0.0 || x > 1.0 / m) return 0.0;
    return m * m * std::pow(1.0 - m * x, m - 1.0);
  };
  s.mean = 1.0 / (m * (m + 1.0));
  s.variance = 1.0 / (m * (m + 1.0) * (m + 1.0) * (m + 2.0));
  return s;
}

}  // namespace randmaj
