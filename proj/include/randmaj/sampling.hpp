#pragma once

// Samplers for points of the unit simplex.
//
// The diagonal of a Haar-random pure state is uniform on the simplex, which is
// sampled as iid Exp(1) draws divided by their sum. Dirichlet(alpha) points
// replace the exponentials by Gamma(alpha, 1) draws.

#include <cstddef>
#include <span>
#include <vector>

#include "randmaj/prob_vector.hpp"
#include "randmaj/rng.hpp"

namespace randmaj {

/// Symmetric Dirichlet concentration; alpha = 1 is the flat measure.
class DirichletParam {
 public:
  /// Throws std::invalid_argument unless alpha > 0 and finite.
  explicit DirichletParam(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Inverse transform of Exp(1): -log(1 - u).
double exponential_from_uniform(double u);

double sample_exponential(RngStream& rng);
void fill_exponentials(std::span<double> out, RngStream& rng);
std::vector<double> sample_exponentials(std::size_t k, RngStream& rng);

double sample_standard_normal(RngStream& rng);

/// Marsaglia-Tsang squeeze for shape >= 1; shape < 1 uses
/// Gamma(shape + 1) * U^(1/shape). Shape 1 draws a plain exponential.
double sample_gamma(double shape, RngStream& rng);

/// Fills `out` with a uniform point of the simplex (in place, no allocation).
void fill_uniform_simplex(std::span<double> out, RngStream& rng);
ProbVector sample_uniform_simplex(std::size_t n, RngStream& rng);

/// alpha == 1 consumes the stream exactly like fill_uniform_simplex and
/// returns the same bits.
void fill_dirichlet(std::span<double> out, DirichletParam p, RngStream& rng);
ProbVector sample_dirichlet(std::size_t n, DirichletParam p, RngStream& rng);

}  // namespace randmaj
