#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fractel/fractel.hpp"

namespace fractel {

/// One map of a local IFS: an affine-in-y fractel acting on fractel_domain x R.
struct IfsPiece {
  Fractel w;
  Interval fractel_domain;

  double s() const { return w.F().affine().s; }
  const ScalarFunction& lambda() const { return w.F().affine().lambda; }
  Interval image() const { return w.l().image_of(fractel_domain); }
};

struct CoverDiagnostic {
  bool covering = false;            // images cover the base
  bool overlaps_at_endpoints = true;  // images meet at most in endpoints
};

/// Local IFS on a base interval. Every piece must be affine in y, contractive
/// in y (|s| < 1, s = 0 allowed) and map its fractel domain into the base.
class LocalIFS {
 public:
  LocalIFS(Interval base, std::vector<IfsPiece> pieces);

  const Interval& base() const noexcept { return base_; }
  const std::vector<IfsPiece>& pieces() const noexcept { return pieces_; }
  const CoverDiagnostic& cover() const noexcept { return cover_; }
  bool covering() const noexcept { return cover_.covering; }

  /// max |s_n|
  double max_contraction() const;

  /// Index of the piece whose image contains x; the last such piece wins.
  /// Returns pieces().size() when no image contains x.
  std::size_t piece_for(double x) const;

 private:
  Interval base_;
  std::vector<IfsPiece> pieces_;
  CoverDiagnostic cover_;
};

using Point = std::pair<double, double>;

/// Union over pieces of w_n({(x, y) in points : x in fractel_domain_n}).
std::vector<Point> set_operator_step(const LocalIFS& ifs, const std::vector<Point>& points);

/// Function samples on a strictly increasing grid.
struct PiecewiseSample {
  std::vector<double> xs;
  std::vector<double> ys;

  static PiecewiseSample from_function(const Interval& dom, std::size_t n,
                                       const std::function<double(double)>& f);
  /// Linear interpolation, clamped to [xs.front(), xs.back()].
  double interpolate(double x) const;
  void validate() const;
};

struct FixedPointResult {
  PiecewiseSample sample;
  std::vector<double> sup_changes;  // ||Phi^k g - Phi^(k-1) g|| per iteration
  double contraction_ratio = 0.0;   // max successive ratio while changes exceed 1e-10
  std::size_t iterations = 0;
  bool converged = false;            // stopped on sup-change < 1e-12
  std::size_t endpoint_conflicts = 0;  // overlaps where pieces disagree by > 1e-9
};

/// Iterates the RB operator on the sample grid of `init`, reading
/// g(l_n^-1(x)) by linear interpolation. Stops after `iterations` steps or
/// when the sup-change drops below 1e-12. Throws NotCovering when the piece
/// images do not cover the base.
FixedPointResult rb_fixed_point(const LocalIFS& ifs, const PiecewiseSample& init,
                                std::size_t iterations);

/// Pointwise value of the RB fixed point: follows x -> l_n^-1(x) through the
/// pieces, accumulating s-weighted lambda values until the weight is below
/// 1e-18 or `max_depth` steps; the tail uses `tail` (0 by default).
double evaluate_fixed_point(const LocalIFS& ifs, double x, std::size_t max_depth = 400,
                            double tail = 0.0);

/// sigma = 2^-theta; l(x) = (x + tau)/2 on domain; F = sigma y + (1 - sigma) G(x) with
/// G(x) = (g((x + tau)/2) - sigma g(x)) / (1 - sigma). This fractel verifies for
/// alpha (x - tau)^theta + g(x) for any alpha. theta = +inf gives sigma = 0, G = g(l(x)).
Fractel build_fractel_for_power_plus_g(double alpha, double tau, double theta,
                                       const ScalarFunction& g, const Interval& domain);

/// The G above.
ScalarFunction power_plus_g_G(double tau, double sigma, const ScalarFunction& g,
                              const Interval& domain);

enum class GammaRule { Mean, Midpoint, Trapezoid };

/// Constant approximation of G on the domain.
double approximate_gamma(const ScalarFunction& G, const Interval& domain, GammaRule rule);

enum class SqrtMode { Exact, Midpoint, Mean, Trapezoid };

/// Three-piece local IFS on [0, 1] for sqrt(x): (x/2, y/sqrt 2) on [0, 1] and
/// ((x + tau_i)/2, sigma_i y + (1 - sigma_i) G_i) on [1/2, 1] with tau = 1/2, 1.
/// Non-exact modes replace G_i by the constant of the chosen rule.
LocalIFS build_sqrt_ifs(double sigma2, double sigma3, SqrtMode mode);

/// sup over the grid of |lambda_n - lambda~_n| per piece; both IFSs must share
/// their maps.
std::vector<double> lambda_deviations(const LocalIFS& exact, const LocalIFS& approx,
                                      std::size_t grid = 10000);

/// max(devs) / (1 - s_max). Throws ContractionViolation when s_max >= 1.
double error_bound(const std::vector<double>& lambda_devs, double s_max);

struct RelativeErrorRow {
  double x;
  double e;
};

struct RelativeErrorProfile {
  std::vector<RelativeErrorRow> rows;
  double max_abs = 0.0;
};

/// e(x) = f_F(x) / f(x) - 1 on `grid` log-spaced points in [x_min, base.hi].
/// f_F is the fixed point of `ifs`, evaluated pointwise.
RelativeErrorProfile relative_error_profile(const LocalIFS& ifs, const ScalarFunction& reference,
                                            std::size_t grid, double x_min = 1e-6,
                                            std::size_t max_depth = 400);

/// Vector-valued local IFS pieces: y -> M y + c(x) on R^m.
struct VectorIfsPiece {
  AffineMap1D l;
  Interval fractel_domain;
  std::vector<std::vector<double>> M;
  std::function<std::vector<double>(double)> offset;  // empty = zero
};

struct VectorFixedPointResult {
  std::vector<double> xs;
  std::vector<std::vector<double>> ys;  // ys[i] = value at xs[i]
  std::vector<double> sup_changes;
  std::size_t iterations = 0;
};

/// RB iteration for vector-valued functions on the grid of `xs`.
VectorFixedPointResult rb_fixed_point_vector(const Interval& base,
                                             const std::vector<VectorIfsPiece>& pieces,
                                             std::vector<double> xs,
                                             std::vector<std::vector<double>> init,
                                             std::size_t iterations);

}  // namespace fractel
