#pragma once

// Order statistics of n iid variables with distribution function F and
// density f, and the limiting V/W chains of the extreme components of a
// uniform simplex point. These closed forms serve as oracles for the
// statistical tests.
//
// Order statistics are indexed in decreasing order: X_desc[1] is the largest.

#include <cstddef>
#include <functional>
#include <span>

#include "randmaj/chain.hpp"
#include "randmaj/rng.hpp"

namespace randmaj {

struct BaseDistribution {
  std::function<double(double)> cdf;
  std::function<double(double)> pdf;

  /// Exp(1): F(x) = 1 - e^{-x} on x >= 0.
  static BaseDistribution exponential();
  /// Uniform(0, 1).
  static BaseDistribution uniform01();
};

/// Density of the k-th largest of n: n!/((n-k)!(k-1)!) F^{n-k} f (1-F)^{k-1}.
double density_order_stat(std::size_t n, std::size_t k, const BaseDistribution& d, double x);

/// Joint density of the k largest at xs[0] >= ... >= xs[k-1]
/// (zero if xs is not non-increasing).
double joint_density_top(std::size_t n, std::size_t k, const BaseDistribution& d,
                         std::span<const double> xs);

/// Joint density of the k smallest, given in decreasing order
/// xs[0] = x_{n-k+1} >= ... >= xs[k-1] = x_n.
double joint_density_bottom(std::size_t n, std::size_t k, const BaseDistribution& d,
                            std::span<const double> xs);

/// P(X_desc[k+1] <= y | X_desc[k] = x) = (F(min(y, x)) / F(x))^{n-k}.
double transition_cdf_top(std::size_t n, std::size_t k, const BaseDistribution& d,
                          double y, double x);

/// P(X_desc[n-k] <= y | X_desc[n-k+1] = x) = 1 - ((1 - F(max(y, x))) / (1 - F(x)))^{n-k}.
double transition_cdf_bottom(std::size_t n, std::size_t k, const BaseDistribution& d,
                             double y, double x);

/// V_j = X_1 + ... + X_j.
ChainSample v_chain_from_spacings(std::span<const double> spacings);
/// W_j = -log(X_1 + ... + X_j).
ChainSample w_chain_from_spacings(std::span<const double> spacings);

ChainSample sample_v_chain(std::size_t k, RngStream& rng);
ChainSample sample_w_chain(std::size_t k, RngStream& rng);

/// exp(-v_k) on 0 <= v_1 <= ... <= v_k, else 0.
double joint_density_v(std::span<const double> vs);
/// exp(-w_1 - ... - w_k - e^{-w_k}) on w_1 >= ... >= w_k, else 0.
double joint_density_w(std::span<const double> ws);

double gumbel_cdf(double w);
double exponential_cdf(double x);

/// Law of the smallest component of a uniform point of the n-simplex.
struct MinComponentStats {
  std::function<double(double)> density;  // n^2 (1 - n x)^{n-1} on [0, 1/n]
  double mean;                            // 1 / (n (n+1))
  double variance;                        // 1 / (n (n+1)^2 (n+2))
};

MinComponentStats min_component_stats(std::size_t n);

}  // namespace randmaj
