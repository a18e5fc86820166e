#include "randmaj/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "randmaj/errors.hpp"
#include "randmaj/kernels.hpp"
#include "randmaj/majorization.hpp"
#include "randmaj/prob_vector.hpp"

namespace randmaj {
namespace {

struct ChunkRange {
  std::uint64_t index;
  std::uint64_t count;
};

// Runs fn(ChunkRange) for every chunk and returns the results in chunk order.
template <class Fn>
auto run_chunks(std::uint64_t samples, const ParallelOptions& par, Fn fn)
    -> std::vector<decltype(fn(ChunkRange{}))> {
  if (samples == 0) throw DomainError("sample count must be at least 1");
  if (par.chunk_size == 0) throw DomainError("chunk size must be at least 1");
  const std::uint64_t chunks = (samples + par.chunk_size - 1) / par.chunk_size;
  std::vector<decltype(fn(ChunkRange{}))> results(chunks);

  auto range = [&](std::uint64_t c) {
    return ChunkRange{c, std::min(par.chunk_size, samples - c * par.chunk_size)};
  };
  const std::size_t threads =
      static_cast<std::size_t>(std::min<std::uint64_t>(std::max<std::size_t>(par.threads, 1), chunks));
  if (threads == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) results[c] = fn(range(c));
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        try {
          results[c] = fn(range(c));
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(chunks);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

// Buffers for one random pair, reused across samples of a chunk.
class PairWorkspace {
 public:
  PairWorkspace(std::size_t n, DirichletParam alpha)
      : alpha_(alpha), x_(n), sx_(n), y_(n), sy_(n), walk_(n) {}

  void draw(RngStream& rng) {
    fill_dirichlet(x_, alpha_, rng);
    sort_with_suffix_sums(x_, sx_);
    fill_dirichlet(y_, alpha_, rng);
    sort_with_suffix_sums(y_, sy_);
  }

  std::span<const double> sx() const { return sx_; }
  std::span<const double> sy() const { return sy_; }

  std::span<const double> bridge() {
    suffix::bridge_walk(sx_, sy_, walk_);
    return walk_;
  }

 private:
  DirichletParam alpha_;
  std::vector<double> x_, sx_, y_, sy_, walk_;
};

void require_dimension(std::size_t n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
}

template <class Statistic>
EmpiricalCdf pair_statistic_cdf(std::size_t n, std::uint64_t samples, RngStream seed,
                                const ParallelOptions& par, DirichletParam alpha,
                                Statistic stat) {
  auto chunks = run_chunks(samples, par, [&](ChunkRange c) {
    RngStream rng = seed.offset(c.index);
    PairWorkspace ws(n, alpha);
    std::vector<double> out;
    out.reserve(c.count);
    for (std::uint64_t i = 0; i < c.count; ++i) {
      ws.draw(rng);
      out.push_back(stat(ws));
    }
    return out;
  });
  std::vector<double> all;
  all.reserve(samples);
  for (const auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  return EmpiricalCdf(std::move(all));
}

}  // namespace

EstimateWithError estimate_partial_majorization(std::size_t n, std::size_t k,
                                                std::uint64_t samples, RngStream seed,
                                                const ParallelOptions& par,
                                                DirichletParam alpha) {
  require_dimension(n);
  if (k < 1 || k > n) throw DomainError("condition count k must lie in [1, n]");
  auto counts = run_chunks(samples, par, [&](ChunkRange c) {
    RngStream rng = seed.offset(c.index);
    PairWorkspace ws(n, alpha);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < c.count; ++i) {
      ws.draw(rng);
      hits += suffix::majorizes_smallest(ws.sx(), ws.sy(), k) ? 1 : 0;
    }
    return hits;
  });
  std::uint64_t hits = 0;
  for (auto h : counts) hits += h;
  return EstimateWithError::proportion(hits, samples);
}

EstimateWithError estimate_convertibility(std::size_t n, std::uint64_t samples, RngStream seed,
                                          const ParallelOptions& par, DirichletParam alpha) {
  require_dimension(n);
  return estimate_partial_majorization(n, n, samples, seed, par, alpha);
}

std::vector<EstimateWithError> persistence_irw(std::size_t k_max, std::uint64_t samples,
                                               RngStream seed, const ParallelOptions& par) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  // histogram of survival length: survived[k] = paths with I_1..I_k >= 0 and I_{k+1} < 0
  auto hist = run_chunks(samples, par, [&](ChunkRange c) {
    RngStream rng = seed.offset(c.index);
    std::vector<std::uint64_t> survived(k_max + 1, 0);
    for (std::uint64_t i = 0; i < c.count; ++i) {
      double walk = 0.0;
      double integrated = 0.0;
      std::size_t k = 0;
      while (k < k_max) {
        const double step = sample_exponential(rng) - sample_exponential(rng);
        walk += step;
        integrated += walk;
        if (integrated < 0.0) break;
        ++k;
      }
      ++survived[k];
    }
    return survived;
  });
  std::vector<std::uint64_t> survived(k_max + 1, 0);
  for (const auto& h : hist)
    for (std::size_t k = 0; k <= k_max; ++k) survived[k] += h[k];

  std::vector<EstimateWithError> p(k_max);
  std::uint64_t alive = 0;
  for (std::size_t k = k_max; k >= 1; --k) {
    alive += survived[k];
    p[k - 1] = EstimateWithError::proportion(alive, samples);
  }
  return p;
}

EmpiricalCdf occupation_time_experiment(std::size_t n, std::uint64_t samples, RngStream seed,
                                        const ParallelOptions& par, DirichletParam alpha) {
  require_dimension(n);
  const double dim = static_cast<double>(n);
  return pair_statistic_cdf(n, samples, seed, par, alpha, [dim](PairWorkspace& ws) {
    return static_cast<double>(kernels::count_nonnegative(ws.bridge())) / dim;
  });
}

EmpiricalCdf pi_distribution_experiment(std::size_t n, std::uint64_t samples, RngStream seed,
                                        const ParallelOptions& par, DirichletParam alpha) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  return pair_statistic_cdf(n, samples, seed, par, alpha, [](PairWorkspace& ws) {
    return suffix::conversion_probability(ws.sx(), ws.sy());
  });
}

bool PiInfinityAccumulator::push(double spacing, double spacing_prime) {
  v_ += spacing;
  v_prime_ += spacing_prime;
  sum_ += v_;
  sum_prime_ += v_prime_;
  const double ratio = sum_ / sum_prime_;
  inf_ = (k_ == 0) ? ratio : std::min(inf_, ratio);
  ++k_;
  if (k_ >= k_max_) return true;
  if (early_stop_ && sum_ > kEarlyStopMass && sum_prime_ > kEarlyStopMass &&
      inf_ < kEarlyStopLevel) {
    stopped_early_ = true;
    return true;
  }
  return false;
}

PiLimitResult pi_limit_experiment(std::uint64_t samples, std::size_t k_max, RngStream seed,
                                  const ParallelOptions& par, bool early_stop) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  struct Chunk {
    std::vector<double> raw;
    std::uint64_t early = 0;
  };
  auto chunks = run_chunks(samples, par, [&](ChunkRange c) {
    const RngStream base = seed.offset(c.index);
    Chunk out;
    out.raw.reserve(c.count);
    for (std::uint64_t i = 0; i < c.count; ++i) {
      RngStream rng = base.window(i);
      PiInfinityAccumulator acc(k_max, early_stop);
      for (;;) {
        const double a = sample_exponential(rng);
        const double b = sample_exponential(rng);
        if (acc.push(a, b)) break;
      }
      out.raw.push_back(acc.value());
      out.early += acc.stopped_early() ? 1 : 0;
    }
    return out;
  });
  std::vector<double> raw;
  raw.reserve(samples);
  std::uint64_t early = 0;
  for (const auto& c : chunks) {
    raw.insert(raw.end(), c.raw.begin(), c.raw.end());
    early += c.early;
  }
  std::vector<double> clamped(raw.size());
  std::transform(raw.begin(), raw.end(), clamped.begin(),
                 [](double r) { return std::min(r, 1.0); });
  return {EmpiricalCdf(std::move(clamped)), std::move(raw), early};
}

}  // namespace randmaj
