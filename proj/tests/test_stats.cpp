#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "randmaj/errors.hpp"
#include "randmaj/order_stats.hpp"
#include "randmaj/rng.hpp"
#include "randmaj/sampling.hpp"
#include "randmaj/stats.hpp"

using namespace randmaj;

TEST_CASE("proportion estimate") {
  const auto e = EstimateWithError::proportion(25, 100);
  CHECK(e.value == 0.25);
  CHECK(e.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 100)));
  CHECK(e.samples == 100);
  CHECK(EstimateWithError::proportion(0, 10).std_error == 0.0);
  CHECK_THROWS(EstimateWithError::proportion(1, 0));
  CHECK_THROWS(EstimateWithError::proportion(11, 10));
}

TEST_CASE("power-law fit recovers exact laws") {
  std::vector<PowerLawPoint> pts;
  for (double n : {2.0, 4.0, 8.0, 16.0, 32.0}) pts.push_back({n, 1.0 / std::sqrt(n), 0.0});
  const auto fit = fit_power_law(pts);
  CHECK(fit.exponent_theta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.amplitude_b == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.sigma_theta < 1e-12);

  pts.clear();
  for (double n : {3.0, 10.0, 100.0, 1000.0}) pts.push_back({n, 3.0 / n, 0.0});
  const auto fit2 = fit_power_law(pts);
  CHECK(fit2.exponent_theta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit2.amplitude_b == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("power-law fit: slope error on noisy data") {
  // residuals +e, -e, +e, -e on log-spaced x: sigma = sqrt(SSR/(m-2)/Sxx)
  const double eps = 0.01;
  std::vector<PowerLawPoint> pts;
  const std::vector<double> ns{1.0, std::exp(1.0), std::exp(2.0), std::exp(3.0)};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double r = (i % 2 == 0) ? eps : -eps;
    pts.push_back({ns[i], std::exp(-0.4 * std::log(ns[i]) + r), 0.0});
  }
  const auto fit = fit_power_law(pts);
  // OLS on x = 0..3, y = -0.4x + (e, -e, e, -e)
  const double sxx = 5.0;
  const double slope_shift = (-1.5 * eps + 0.5 * eps + 0.5 * eps - 1.5 * eps) / sxx;
  CHECK(fit.exponent_theta == doctest::Approx(0.4 - slope_shift).epsilon(1e-12));
  double ssr = 0.0;
  const double intercept = -0.6 - (-0.4 + slope_shift) * 1.5;
  for (int i = 0; i < 4; ++i) {
    const double y = -0.4 * i + ((i % 2 == 0) ? eps : -eps);
    const double pred = intercept + (-0.4 + slope_shift) * i;
    ssr += (y - pred) * (y - pred);
  }
  CHECK(fit.sigma_theta == doctest::Approx(std::sqrt(ssr / 2.0 / sxx)).epsilon(1e-9));
}

TEST_CASE("power-law fit: invalid inputs") {
  std::vector<PowerLawPoint> two{{2, 0.5, 0}, {4, 0.25, 0}};
  CHECK_THROWS_AS(fit_power_law(two), DomainError);
  std::vector<PowerLawPoint> zero{{2, 0.5, 0}, {4, 0.0, 0}, {8, 0.1, 0}};
  CHECK_THROWS_AS(fit_power_law(zero), DomainError);
  std::vector<PowerLawPoint> same{{4, 0.5, 0}, {4, 0.4, 0}, {4, 0.3, 0}};
  CHECK_THROWS_AS(fit_power_law(same), DomainError);
}

TEST_CASE("empirical CDF") {
  const EmpiricalCdf e({3.0, 1.0, 2.0, 2.0});
  CHECK(e(0.5) == 0.0);
  CHECK(e(1.0) == 0.25);
  CHECK(e(2.0) == 0.75);
  CHECK(e.left_limit(2.0) == 0.25);
  CHECK(e.mass_at(2.0) == 0.5);
  CHECK(e(10.0) == 1.0);
  CHECK_THROWS_AS(EmpiricalCdf({}), std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalCdf({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("KS distance: examples") {
  const auto uniform = [](double t) { return std::clamp(t, 0.0, 1.0); };
  CHECK(ks_distance(EmpiricalCdf({0.5}), uniform) == doctest::Approx(0.5));

  // midpoint quantiles of the reference: distance exactly 1/(2N)
  constexpr int N = 1000;
  std::vector<double> q;
  for (int i = 0; i < N; ++i) q.push_back((i + 0.5) / N);
  CHECK(ks_distance(EmpiricalCdf(q), uniform) == doctest::Approx(0.5 / N).epsilon(1e-9));
  CHECK(ks_distance(EmpiricalCdf(q), uniform) <= 0.5 / N + 1e-15);

  RngStream rng(11, 0);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(sample_exponential(rng));
  CHECK(ks_distance(EmpiricalCdf(xs), exponential_cdf) < 0.0136);
}

TEST_CASE("KS distance on a lattice ignores atoms between lattice points") {
  const EmpiricalCdf e({0.0, 0.5, 1.0, 1.0});
  const auto ref = [](double t) { return std::clamp(t, 0.0, 1.0); };
  const std::vector<double> lattice{0.0, 0.5, 1.0};
  CHECK(ks_distance_at(e, ref, lattice) == doctest::Approx(0.25));
  CHECK(ks_distance(e, ref) == doctest::Approx(0.5));
}

TEST_CASE("two-sample KS") {
  CHECK(ks_distance(EmpiricalCdf({1.0, 2.0}), EmpiricalCdf({1.0, 2.0})) == 0.0);
  CHECK(ks_distance(EmpiricalCdf({1.0, 2.0}), EmpiricalCdf({3.0, 4.0})) == 1.0);
  CHECK(ks_distance(EmpiricalCdf({1.0, 3.0}), EmpiricalCdf({2.0, 4.0})) == 0.5);
  CHECK(ks_distance(EmpiricalCdf({1.0, 2.0, 3.0, 4.0}), EmpiricalCdf({2.5})) == 0.5);
}

TEST_CASE("arcsine CDF") {
  CHECK(arcsine_cdf(0.0) == 0.0);
  CHECK(arcsine_cdf(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(arcsine_cdf(0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(arcsine_cdf(0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(arcsine_cdf(-0.01), DomainError);
  CHECK_THROWS_AS(arcsine_cdf(1.01), DomainError);
}

TEST_CASE("mean and unbiased variance") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const auto mv = mean_variance(xs);
  CHECK(mv.mean == 2.5);
  CHECK(mv.variance == doctest::Approx(5.0 / 3.0));
  CHECK(mv.count == 4);
}
