#include "fractel/interval.hpp"

namespace fractel {

std::vector<double> Interval::grid(std::size_t n) const {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> xs(n);
  const double h = length() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo_ + h * static_cast<double>(i);
  xs.back() = hi_;
  return xs;
}

Interval intersect(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

AffineMap1D::AffineMap1D(double sigma, double tau, Interval domain)
    : sigma_(sigma), tau_(tau), domain_(domain) {
  if (sigma == 0.0 || !std::isfinite(sigma) || !std::isfinite(tau)) {
    throw Error(ErrorKind::InvalidArgument, "affine map needs finite sigma != 0");
  }
}

Interval AffineMap1D::image_of(const Interval& iv) const {
  const double a = (*this)(iv.lo());
  const double b = (*this)(iv.hi());
  return Interval(std::min(a, b), std::max(a, b));
}

AffineMap1D compose(const AffineMap1D& outer, const AffineMap1D& inner) {
  return AffineMap1D(outer.sigma() * inner.sigma(), outer.sigma() * inner.tau() + outer.tau(),
                     inner.domain());
}

}  // namespace fractel
