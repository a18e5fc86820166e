#pragma once

// Monte Carlo experiments on pairs of independent random simplex points and on
// the limiting chains.
//
// Every experiment splits its sample budget into chunks of `chunk_size`
// samples; chunk i draws from seed.offset(i). Per-chunk results are merged in
// chunk order, so the output depends only on (arguments, seed, chunk_size) and
// never on the number of threads.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "randmaj/rng.hpp"
#include "randmaj/sampling.hpp"
#include "randmaj/stats.hpp"

namespace randmaj {

struct ParallelOptions {
  std::size_t threads = 1;
  std::uint64_t chunk_size = 10000;
};

/// Fraction of pairs (mu, mu') with mu majorized by mu'.
EstimateWithError estimate_convertibility(std::size_t n, std::uint64_t samples, RngStream seed,
                                          const ParallelOptions& par = {},
                                          DirichletParam alpha = DirichletParam(1.0));

/// Fraction of pairs meeting the k suffix conditions on the k smallest
/// components. k = n is estimate_convertibility on the same pairs.
EstimateWithError estimate_partial_majorization(std::size_t n, std::size_t k,
                                                std::uint64_t samples, RngStream seed,
                                                const ParallelOptions& par = {},
                                                DirichletParam alpha = DirichletParam(1.0));

/// p_1..p_{k_max}: probability that the integrated random walk with
/// Laplace(1) steps stays >= 0 up to time k. Computed on shared paths, so the
/// sequence is exactly non-increasing.
std::vector<EstimateWithError> persistence_irw(std::size_t k_max, std::uint64_t samples,
                                               RngStream seed, const ParallelOptions& par = {});

/// Empirical law of N_n / n, the fraction of bridge steps at or above 0.
EmpiricalCdf occupation_time_experiment(std::size_t n, std::uint64_t samples, RngStream seed,
                                        const ParallelOptions& par = {},
                                        DirichletParam alpha = DirichletParam(1.0));

/// Empirical law of the conversion probability between independent pairs.
EmpiricalCdf pi_distribution_experiment(std::size_t n, std::uint64_t samples, RngStream seed,
                                        const ParallelOptions& par = {},
                                        DirichletParam alpha = DirichletParam(1.0));

/// Streaming evaluation of the truncated infimum of prefix-sum ratios of two
/// V chains, fed one pair of exponential spacings at a time.
class PiInfinityAccumulator {
 public:
  /// Both prefix sums must exceed this before early stopping is considered.
  static constexpr double kEarlyStopMass = 1e3;
  /// Early stopping only applies once the running infimum is below this.
  static constexpr double kEarlyStopLevel = 0.9;

  PiInfinityAccumulator(std::size_t k_max, bool early_stop)
      : k_max_(k_max), early_stop_(early_stop) {}

  /// Adds the next spacings of V and V'. Returns true once no further terms
  /// are needed (k_max reached or the early-stop rule fired).
  bool push(double spacing, double spacing_prime);

  double value() const { return inf_; }
  std::size_t terms() const { return k_; }
  bool stopped_early() const { return stopped_early_; }

 private:
  std::size_t k_max_;
  bool early_stop_;
  std::size_t k_ = 0;
  double v_ = 0.0, v_prime_ = 0.0;
  double sum_ = 0.0, sum_prime_ = 0.0;
  double inf_ = 0.0;
  bool stopped_early_ = false;
};

struct PiLimitResult {
  EmpiricalCdf clamped;             // min(raw, 1) per sample
  std::vector<double> raw;          // truncated infimum, in sample order
  std::uint64_t early_stopped = 0;  // samples cut short by the early-stop rule
};

/// Empirical law of the truncated limit functional over independent V-chain
/// pairs. Sample i uses window i of its chunk's stream, so its value does not
/// depend on how many draws earlier samples consumed.
PiLimitResult pi_limit_experiment(std::uint64_t samples, std::size_t k_max, RngStream seed,
                                  const ParallelOptions& par = {}, bool early_stop = false);

}  // namespace randmaj
