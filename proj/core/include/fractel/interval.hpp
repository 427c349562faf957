#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fractel/error.hpp"

namespace fractel {

/// Endpoint slack used by every closed-interval inclusion test.
inline constexpr double kEndpointTol = 1e-12;

/// Closed interval [lo, hi] with lo < hi.
class Interval {
 public:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw Error(ErrorKind::InvalidArgument,
                  "degenerate interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double length() const noexcept { return hi_ - lo_; }
  double midpoint() const noexcept { return 0.5 * (lo_ + hi_); }

  bool contains(double x, double tol = kEndpointTol) const noexcept {
    return x >= lo_ - tol && x <= hi_ + tol;
  }
  bool contains(const Interval& other, double tol = kEndpointTol) const noexcept {
    return other.lo_ >= lo_ - tol && other.hi_ <= hi_ + tol;
  }
  double clamp(double x) const noexcept { return std::clamp(x, lo_, hi_); }

  /// `n` equispaced points including both endpoints (n >= 2).
  std::vector<double> grid(std::size_t n) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Intersection of two intervals; throws InvalidArgument when it is empty or a point.
Interval intersect(const Interval& a, const Interval& b);

/// l(x) = sigma * x + tau restricted to `domain`.
class AffineMap1D {
 public:
  AffineMap1D(double sigma, double tau, Interval domain);

  static AffineMap1D identity(Interval domain) { return {1.0, 0.0, domain}; }

  double sigma() const noexcept { return sigma_; }
  double tau() const noexcept { return tau_; }
  const Interval& domain() const noexcept { return domain_; }

  double operator()(double x) const noexcept { return sigma_ * x + tau_; }
  double inverse(double x) const noexcept { return (x - tau_) / sigma_; }

  /// l(domain), oriented so that lo < hi.
  Interval image() const { return image_of(domain_); }
  Interval image_of(const Interval& iv) const;

  bool is_identity() const noexcept { return sigma_ == 1.0 && tau_ == 0.0; }

  /// Unique fixed point tau / (1 - sigma); only meaningful for sigma != 1.
  double fixed_point() const noexcept { return tau_ / (1.0 - sigma_); }

 private:
  double sigma_;
  double tau_;
  Interval domain_;
};

/// (outer o inner)(x) = outer(inner(x)) on inner's domain.
AffineMap1D compose(const AffineMap1D& outer, const AffineMap1D& inner);

}  // namespace fractel
