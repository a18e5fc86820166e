#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace randmaj {

/// Monte Carlo estimate with its standard error.
struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;

  /// Proportion successes / samples with binomial error sqrt(p(1-p)/N).
  static EstimateWithError proportion(std::uint64_t successes, std::uint64_t samples);
};

/// value ~ amplitude_b * n^{-exponent_theta}.
struct PowerLawFit {
  double amplitude_b = 0.0;
  double exponent_theta = 0.0;
  double sigma_theta = 0.0;
};

struct PowerLawPoint {
  double n;
  double value;
  double std_error;
};

/// Unweighted least squares of log(value) on log(n). sigma_theta is the usual
/// OLS slope standard error (residual variance with m - 2 degrees of freedom).
/// Throws DomainError with fewer than 3 points, a non-positive value or n, or
/// all n equal. The std_error field is carried but does not weight the fit.
PowerLawFit fit_power_law(std::span<const PowerLawPoint> points);

/// Right-continuous empirical distribution function.
class EmpiricalCdf {
 public:
  /// Throws std::invalid_argument on an empty sample or NaN entries.
  explicit EmpiricalCdf(std::vector<double> samples);

  std::span<const double> sorted_samples() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

  /// Fraction of samples <= x.
  double operator()(double x) const;
  /// Fraction of samples < x.
  double left_limit(double x) const;
  /// Fraction of samples == x.
  double mass_at(double x) const { return (*this)(x) - left_limit(x); }

 private:
  std::vector<double> sorted_;
};

/// sup_x |F_hat(x) - F(x)| for continuous F, taking both one-sided limits of
/// F_hat at every sample point.
double ks_distance(const EmpiricalCdf& e, const std::function<double(double)>& reference);

/// max over the given points t of |F_hat(t) - F(t)|. Used for lattice-valued
/// statistics, where the points are the support of the lattice.
double ks_distance_at(const EmpiricalCdf& e, const std::function<double(double)>& reference,
                      std::span<const double> points);

/// sup_x |F_1(x) - F_2(x)| between two empirical distribution functions.
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// (2/pi) arcsin(sqrt(t)); throws DomainError outside [0, 1].
double arcsine_cdf(double t);

struct MeanVariance {
  double mean;
  double variance;  // unbiased
  std::size_t count;
};

MeanVariance mean_variance(std::span<const double> xs);

}  // namespace randmaj
