#include <doctest.h>

#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

#include "randmaj/errors.hpp"
#include "randmaj/order_stats.hpp"
#include "randmaj/sampling.hpp"
#include "randmaj/stats.hpp"

using namespace randmaj;
namespace quad = boost::math::quadrature;

namespace {

double integrate_half_line(const std::function<double(double)>& f) {
  quad::exp_sinh<double> integrator;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

double integrate_interval(const std::function<double(double)>& f, double a, double b) {
  return quad::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

}  // namespace

TEST_CASE("base distributions: pdf is the derivative of cdf") {
  const auto check = [](const BaseDistribution& d, std::vector<double> points) {
    for (double x : points) {
      const double h = 1e-5;
      const double fd = (d.cdf(x + h) - d.cdf(x - h)) / (2 * h);
      CHECK(std::abs(fd - d.pdf(x)) <= 1e-6 * d.pdf(x));
    }
  };
  check(BaseDistribution::exponential(), {0.1, 0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0});
  check(BaseDistribution::uniform01(), {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.95});
}

TEST_CASE("density_order_stat: examples") {
  const auto e = BaseDistribution::exponential();
  CHECK(density_order_stat(1, 1, e, 0.7) == e.pdf(0.7));
  const double expected = 2.0 * (1.0 - std::exp(-1.0)) * std::exp(-1.0);
  CHECK(density_order_stat(2, 1, e, 1.0) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(density_order_stat(2, 1, e, 1.0) == doctest::Approx(0.46510).epsilon(1e-4));
  CHECK(integrate_half_line([&](double x) { return density_order_stat(5, 3, e, x); }) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(density_order_stat(5, 0, e, 1.0), DomainError);
  CHECK_THROWS_AS(density_order_stat(5, 6, e, 1.0), DomainError);
}

TEST_CASE("density_order_stat survives factorial overflow") {
  const auto u = BaseDistribution::uniform01();
  const double mass = integrate_interval([&](double x) { return density_order_stat(500, 250, u, x); },
                                         0.0, 1.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  // Beta(n-k+1, k) density on Uniform(0,1) base, mode near 0.5
  CHECK(std::isfinite(density_order_stat(500, 250, u, 0.5)));
}

TEST_CASE("joint_density_top: examples") {
  const auto e = BaseDistribution::exponential();
  const std::vector<double> xs{2.0, 1.0};
  CHECK(joint_density_top(2, 2, e, xs) == doctest::Approx(2.0 * std::exp(-3.0)).epsilon(1e-13));
  CHECK(joint_density_top(2, 2, e, xs) == doctest::Approx(0.09957).epsilon(1e-4));
  CHECK(joint_density_top(3, 2, e, std::vector<double>{1.0, 2.0}) == 0.0);
  for (double x : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    const std::vector<double> one{x};
    for (std::size_t n : {1u, 3u, 10u, 200u}) {
      CHECK(joint_density_top(n, 1, e, one) ==
            doctest::Approx(density_order_stat(n, 1, e, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("joint_density_bottom: examples") {
  const auto e = BaseDistribution::exponential();
  CHECK(joint_density_bottom(3, 1, e, std::vector<double>{0.5}) ==
        doctest::Approx(3.0 * std::exp(-1.5)).epsilon(1e-13));
  CHECK(joint_density_bottom(3, 1, e, std::vector<double>{0.5}) ==
        doctest::Approx(0.66939).epsilon(1e-4));
  CHECK(joint_density_bottom(3, 2, e, std::vector<double>{0.2, 0.4}) == 0.0);
  const std::vector<double> pts{2.5, 1.0, 0.3};
  CHECK(joint_density_bottom(3, 3, e, pts) == joint_density_top(3, 3, e, pts));
  const auto u = BaseDistribution::uniform01();
  const std::vector<double> upts{0.9, 0.5, 0.1};
  CHECK(joint_density_bottom(3, 3, u, upts) == doctest::Approx(6.0));
}

TEST_CASE("joint densities of the two smallest integrate to one") {
  const auto e = BaseDistribution::exponential();
  // x1 >= x2 >= 0, inner integral over x2 in [0, x1]
  const double mass = integrate_half_line([&](double x1) {
    return integrate_interval(
        [&](double x2) { return joint_density_bottom(4, 2, e, std::vector<double>{x1, x2}); }, 0.0,
        x1);
  });
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("transition CDFs: examples") {
  const auto e = BaseDistribution::exponential();
  CHECK(transition_cdf_top(2, 1, e, 1.5, 1.0) == 1.0);
  CHECK(transition_cdf_top(2, 1, e, 0.5, 1.0) ==
        doctest::Approx((1 - std::exp(-0.5)) / (1 - std::exp(-1.0))).epsilon(1e-14));
  CHECK(transition_cdf_top(2, 1, e, 0.5, 1.0) == doctest::Approx(0.62246).epsilon(1e-4));
  CHECK(transition_cdf_top(5, 2, e, -1e300, 1.0) == 0.0);
  CHECK_THROWS_AS(transition_cdf_top(2, 1, e, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(transition_cdf_top(2, 2, e, 0.5, 1.0), DomainError);

  CHECK(transition_cdf_bottom(2, 1, e, 0.2, 0.5) == 0.0);
  CHECK(transition_cdf_bottom(2, 1, e, 1.0, 0.5) ==
        doctest::Approx(1 - std::exp(-0.5)).epsilon(1e-14));
  CHECK(transition_cdf_bottom(2, 1, e, 1.0, 0.5) == doctest::Approx(0.39347).epsilon(1e-4));
  CHECK(transition_cdf_bottom(4, 1, e, 1e300, 0.5) == 1.0);
  const auto u = BaseDistribution::uniform01();
  CHECK_THROWS_AS(transition_cdf_bottom(2, 1, u, 1.0, 1.0), DomainError);
}

TEST_CASE("transition CDF derivative matches the transition density") {
  const auto e = BaseDistribution::exponential();
  const std::size_t n = 7, k = 3;
  const double x = 1.3;
  for (double y : {0.1, 0.4, 0.9, 1.2}) {
    const double h = 1e-6;
    const double fd =
        (transition_cdf_top(n, k, e, y + h, x) - transition_cdf_top(n, k, e, y - h, x)) / (2 * h);
    const double dens = (n - k) * std::pow(e.cdf(y), n - k - 1) / std::pow(e.cdf(x), n - k) * e.pdf(y);
    CHECK(fd == doctest::Approx(dens).epsilon(1e-6));
  }
}

TEST_CASE("two-step chain sampling matches sorting (n = 20)") {
  const auto e = BaseDistribution::exponential();
  constexpr std::size_t n = 20;
  constexpr int kSamples = 10000;
  RngStream rng(31, 0);
  std::vector<double> sorted_second, chain_second;
  for (int s = 0; s < kSamples; ++s) {
    auto xs = sample_exponentials(n, rng);
    std::nth_element(xs.begin(), xs.begin() + 1, xs.end(), std::greater<>());
    sorted_second.push_back(xs[1]);

    const double top = -std::log1p(-std::pow(rng.next_uniform(), 1.0 / n));
    const double u = rng.next_uniform();
    double lo = 0.0, hi = top;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * top; ++it) {
      const double mid = 0.5 * (lo + hi);
      (transition_cdf_top(n, 1, e, mid, top) < u ? lo : hi) = mid;
    }
    chain_second.push_back(0.5 * (lo + hi));
  }
  const auto exact = [&](double x) {
    const double F = exponential_cdf(x);
    return std::pow(F, n) + n * std::pow(F, n - 1) * (1 - F);
  };
  const EmpiricalCdf a(sorted_second), b(chain_second);
  CHECK(ks_distance(a, b) < 0.02);
  CHECK(ks_distance(a, exact) < 0.02);
  CHECK(ks_distance(b, exact) < 0.02);
}

TEST_CASE("V and W chains from stubbed spacings") {
  const std::vector<double> sp{1.0, 0.5};
  const auto v = v_chain_from_spacings(sp);
  CHECK(v.kind() == ChainSample::Kind::V);
  CHECK(std::vector<double>(v.values().begin(), v.values().end()) == std::vector<double>{1.0, 1.5});

  const std::vector<double> ones{1.0, 1.0};
  const auto w = w_chain_from_spacings(ones);
  CHECK(w.values()[0] == 0.0);
  CHECK(w.values()[1] == doctest::Approx(-0.69315).epsilon(1e-5));
  CHECK_THROWS_AS(ChainSample(ChainSample::Kind::V, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ChainSample(ChainSample::Kind::W, {1.0, 1.5}), std::invalid_argument);
}

TEST_CASE("sampled V chain: Exp(1) start and independent Exp(1) spacing") {
  RngStream rng(41, 0);
  std::vector<double> v1, gap;
  for (int s = 0; s < 10000; ++s) {
    const auto v = sample_v_chain(2, rng);
    v1.push_back(v.values()[0]);
    gap.push_back(v.values()[1] - v.values()[0]);
  }
  CHECK(ks_distance(EmpiricalCdf(v1), exponential_cdf) < 0.02);
  CHECK(ks_distance(EmpiricalCdf(gap), exponential_cdf) < 0.02);
  const auto a = mean_variance(v1), b = mean_variance(gap);
  double cov = 0.0;
  for (std::size_t i = 0; i < v1.size(); ++i) cov += (v1[i] - a.mean) * (gap[i] - b.mean);
  cov /= static_cast<double>(v1.size() - 1);
  CHECK(std::abs(cov / std::sqrt(a.variance * b.variance)) < 0.03);
}

TEST_CASE("sampled W chain: Gumbel start and decreasing paths") {
  RngStream rng(42, 0);
  std::vector<double> w1;
  for (int s = 0; s < 10000; ++s) {
    const auto w = sample_w_chain(5, rng);
    w1.push_back(w.values()[0]);
    for (std::size_t j = 1; j < 5; ++j) CHECK(w.values()[j] < w.values()[j - 1]);
  }
  CHECK(ks_distance(EmpiricalCdf(w1), gumbel_cdf) < 0.02);
}

TEST_CASE("joint densities of the limiting chains") {
  CHECK(joint_density_v(std::vector<double>{1.0, 2.0}) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(joint_density_v(std::vector<double>{1.0, 2.0}) == doctest::Approx(0.13534).epsilon(1e-4));
  CHECK(joint_density_v(std::vector<double>{2.0, 1.0}) == 0.0);
  const double mass_v = integrate_half_line([](double v2) {
    return integrate_interval(
        [&](double v1) { return joint_density_v(std::vector<double>{v1, v2}); }, 0.0, v2);
  });
  CHECK(mass_v == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(joint_density_w(std::vector<double>{0.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(joint_density_w(std::vector<double>{0.0, 1.0}) == 0.0);
  quad::sinh_sinh<double> whole_line;
  const double mass_w =
      whole_line.integrate([](double w) { return joint_density_w(std::vector<double>{w}); });
  CHECK(mass_w == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("min_component_stats: closed forms") {
  const auto s2 = min_component_stats(2);
  CHECK(s2.density(0.0) == 4.0);
  CHECK(s2.density(0.25) == doctest::Approx(2.0));
  CHECK(s2.density(0.6) == 0.0);
  CHECK(s2.mean == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(s2.variance == doctest::Approx(1.0 / 72.0).epsilon(1e-15));
  for (std::size_t n : {2u, 10u, 100u}) {
    const auto s = min_component_stats(n);
    const double top = 1.0 / static_cast<double>(n);
    CHECK(integrate_interval(s.density, 0.0, top) == doctest::Approx(1.0).epsilon(1e-9));
    const double mean = integrate_interval([&](double x) { return x * s.density(x); }, 0.0, top);
    const double second = integrate_interval([&](double x) { return x * x * s.density(x); }, 0.0, top);
    CHECK(mean == doctest::Approx(s.mean).epsilon(1e-9));
    CHECK(second - mean * mean == doctest::Approx(s.variance).epsilon(1e-6));
  }
}

TEST_CASE("extreme components of n = 1000 simplex points follow the limit chains") {
  constexpr std::size_t n = 1000;
  constexpr int kSamples = 10000;
  RngStream rng(51, 0);
  std::vector<double> smallest, second_smallest, largest;
  std::vector<double> buf(n);
  for (int s = 0; s < kSamples; ++s) {
    fill_uniform_simplex(buf, rng);
    std::partial_sort(buf.begin(), buf.begin() + 2, buf.end());
    smallest.push_back(n * n * buf[0]);
    second_smallest.push_back(n * n * buf[1]);
    largest.push_back(n * *std::max_element(buf.begin(), buf.end()) - std::log(double(n)));
  }
  CHECK(ks_distance(EmpiricalCdf(smallest), exponential_cdf) < 0.03);
  CHECK(ks_distance(EmpiricalCdf(largest), gumbel_cdf) < 0.03);

  std::vector<double> v1, v2;
  for (int s = 0; s < kSamples; ++s) {
    const auto v = sample_v_chain(2, rng);
    v1.push_back(v.values()[0]);
    v2.push_back(v.values()[1]);
    CHECK(v.values()[1] >= v.values()[0]);
  }
  CHECK(ks_distance(EmpiricalCdf(smallest), EmpiricalCdf(v1)) < 0.03);
  CHECK(ks_distance(EmpiricalCdf(second_smallest), EmpiricalCdf(v2)) < 0.03);
}
