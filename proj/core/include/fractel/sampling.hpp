#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fractel/algebra.hpp"
#include "fractel/poly_fractel.hpp"

namespace fractel {

/// Seeded generator of rational polynomials and their fractels on [0, 1].
class PolynomialSampler {
 public:
  explicit PolynomialSampler(std::uint64_t seed) : rng_(seed) {}

  /// Numerators in [-9, 9], denominators in [1, 9].
  Rational rational();
  Rational nonzero_rational();
  /// Degree drawn uniformly from [0, max_degree].
  RationalPoly polynomial(unsigned max_degree);
  /// p + (1 + sum |a_i|), which is >= 1 on [0, 1].
  static RationalPoly lifted(const RationalPoly& p);

  /// tau in {0, 1/2, 1}.
  double tau();
  /// theta in [1/2, 4].
  double theta();

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

ScalarFunction polynomial_function(const RationalPoly& p, const Interval& domain = {0.0, 1.0});

/// ((x + tau)/2, sigma y + p((x + tau)/2) - sigma p(x)) with sigma = 2^-theta.
FractelWithWitness polynomial_fractel(const RationalPoly& p, double tau, double theta);

struct ClosureOutcome {
  std::string operation;
  double max_residual;
  bool pass;
};

/// One randomized round of sum / scale / product / compose on fresh
/// polynomials of degree <= max_degree, each checked with verify_fractel.
std::vector<ClosureOutcome> closure_trial(PolynomialSampler& sampler, unsigned max_degree,
                                          double tol, std::size_t grid = 1000);

}  // namespace fractel
