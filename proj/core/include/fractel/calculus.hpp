#pragma once

#include <cmath>
#include <utility>

#include "fractel/fractel.hpp"

namespace fractel {

/// w(x, y) = (s x, g(x) + c y) with 0 < s < 1; l fixes the origin.
class AffineFractelSX {
 public:
  AffineFractelSX(double s, double c, ScalarFunction g);

  double s() const noexcept { return s_; }
  double c() const noexcept { return c_; }
  const ScalarFunction& g() const noexcept { return g_; }

  /// |c| < 1, i.e. usable for fixed-point reconstruction.
  bool contractive_in_y() const noexcept { return std::abs(c_) < 1.0; }

  Fractel to_fractel() const;

 private:
  double s_;
  double c_;
  ScalarFunction g_;
};

/// (s x, g'(x)/s + (c/s) y), a fractel for f'. The result may have |c/s| >= 1.
AffineFractelSX derivative_fractel(const AffineFractelSX& w, const ScalarFunction& g_prime);

/// (s x, s * int_0^x g + s c y), a fractel for int_0^x f.
AffineFractelSX integral_fractel(const AffineFractelSX& w, const ScalarFunction& g_integral);

/// (s x, s^a J^a g(x) + s^a c y), a fractel for the Riemann-Liouville integral J^a f.
AffineFractelSX fractional_integral_fractel(const AffineFractelSX& w, double alpha,
                                            const ScalarFunction& jalpha_g);

/// The (s, c) bookkeeping of the three constructions, generic over the scalar
/// so the power-function law can be checked in exact arithmetic.
template <typename T>
std::pair<T, T> derivative_coefficients(const T& s, const T& c) {
  return {s, c / s};
}
template <typename T>
std::pair<T, T> integral_coefficients(const T& s, const T& c) {
  return {s, s * c};
}

/// Central difference with step h; error O(h^2).
ScalarFunction numeric_derivative(const ScalarFunction& g, double h = 1e-5);
/// x -> int_0^x g by composite Simpson on `panels` (even) panels; error O(h^4).
ScalarFunction numeric_antiderivative(const ScalarFunction& g, std::size_t panels = 256);

/// J^a (x^p) = Gamma(p + 1) / Gamma(p + a + 1) x^(p + a) for p > -1.
ScalarFunction riemann_liouville_monomial(double p, double alpha, Interval domain);

}  // namespace fractel
