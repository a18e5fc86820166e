#include "randmaj/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "randmaj/errors.hpp"

namespace randmaj {

EstimateWithError EstimateWithError::proportion(std::uint64_t successes,
                                                std::uint64_t samples) {
  if (samples == 0) throw DomainError("proportion over zero samples");
  if (successes > samples) throw DomainError("more successes than samples");
  const double p = static_cast<double>(successes) / static_cast<double>(samples);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

PowerLawFit fit_power_law(std::span<const PowerLawPoint> points) {
  const std::size_t m = points.size();
  if (m < 3) throw DomainError("power-law fit needs at least 3 points");
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(points[i].value > 0.0) || !(points[i].n > 0.0)) {
      throw DomainError("power-law fit needs positive n and values");
    }
    lx[i] = std::log(points[i].n);
    ly[i] = std::log(points[i].value);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("power-law fit needs distinct n");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (intercept + slope * lx[i]);
    ssr += r * r;
  }
  const double residual_var = ssr / static_cast<double>(m - 2);
  return {std::exp(intercept), -slope, std::sqrt(residual_var / sxx)};
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("empirical CDF of an empty sample");
  for (double x : sorted_)
    if (std::isnan(x)) throw std::invalid_argument("empirical CDF sample is NaN");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_distance(const EmpiricalCdf& e, const std::function<double(double)>& reference) {
  const auto xs = e.sorted_samples();
  const double n = static_cast<double>(xs.size());
  double sup = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double ref = reference(xs[i]);
    const double below = static_cast<double>(i) / n;
    const double at = static_cast<double>(j) / n;
    sup = std::max({sup, std::abs(below - ref), std::abs(at - ref)});
    i = j;
  }
  return sup;
}

double ks_distance_at(const EmpiricalCdf& e, const std::function<double(double)>& reference,
                      std::span<const double> points) {
  double sup = 0.0;
  for (double t : points) sup = std::max(sup, std::abs(e(t) - reference(t)));
  return sup;
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  const auto xa = a.sorted_samples();
  const auto xb = b.sorted_samples();
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  std::size_t i = 0, j = 0;
  double sup = 0.0;
  while (i < xa.size() || j < xb.size()) {
    double x;
    if (j == xb.size() || (i < xa.size() && xa[i] <= xb[j])) {
      x = xa[i];
    } else {
      x = xb[j];
    }
    while (i < xa.size() && xa[i] == x) ++i;
    while (j < xb.size() && xb[j] == x) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return sup;
}

double arcsine_cdf(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("arcsine_cdf: t outside [0, 1]");
  return 2.0 / std::numbers::pi * std::asin(std::sqrt(t));
}

MeanVariance mean_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw DomainError("mean_variance needs at least 2 values");
  // Welford
  double mean = 0.0, m2 = 0.0;
  std::size_t count = 0;
  for (double x : xs) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  return {mean, m2 / static_cast<double>(count - 1), count};
}

}  // namespace randmaj
