#include "fractel/calculus.hpp"

#include <cmath>

namespace fractel {

AffineFractelSX::AffineFractelSX(double s, double c, ScalarFunction g)
    : s_(s), c_(c), g_(std::move(g)) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorKind::InvalidArgument, "s must lie in (0, 1)");
  if (!std::isfinite(c)) throw Error(ErrorKind::NonFinite, "c is not finite");
}

Fractel AffineFractelSX::to_fractel() const {
  return Fractel::affine(AffineMap1D(s_, 0.0, g_.domain()), c_, g_);
}

AffineFractelSX derivative_fractel(const AffineFractelSX& w, const ScalarFunction& g_prime) {
  const auto [s, c] = derivative_coefficients(w.s(), w.c());
  return {s, c, (1.0 / w.s()) * g_prime.with_domain(w.g().domain())};
}

AffineFractelSX integral_fractel(const AffineFractelSX& w, const ScalarFunction& g_integral) {
  const auto [s, c] = integral_coefficients(w.s(), w.c());
  return {s, c, w.s() * g_integral.with_domain(w.g().domain())};
}

AffineFractelSX fractional_integral_fractel(const AffineFractelSX& w, double alpha,
                                            const ScalarFunction& jalpha_g) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  const double sa = std::pow(w.s(), alpha);
  return {w.s(), sa * w.c(), sa * jalpha_g.with_domain(w.g().domain())};
}

ScalarFunction numeric_derivative(const ScalarFunction& g, double h) {
  const Interval dom = g.domain();
  return ScalarFunction(
      [g, h, dom](double x) {
        // One-sided at the endpoints so every sample stays inside dom.
        const double a = std::max(dom.lo(), x - h);
        const double b = std::min(dom.hi(), x + h);
        return (g.raw(b) - g.raw(a)) / (b - a);
      },
      dom, "d/dx " + g.label());
}

ScalarFunction numeric_antiderivative(const ScalarFunction& g, std::size_t panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "Simpson needs an even panel count");
  }
  return ScalarFunction(
      [g, panels](double x) {
        if (x == 0.0) return 0.0;
        const double h = x / static_cast<double>(panels);
        double sum = g.raw(0.0) + g.raw(x);
        for (std::size_t i = 1; i < panels; ++i) {
          sum += (i % 2 == 1 ? 4.0 : 2.0) * g.raw(h * static_cast<double>(i));
        }
        return sum * h / 3.0;
      },
      g.domain(), "int " + g.label());
}

ScalarFunction riemann_liouville_monomial(double p, double alpha, Interval domain) {
  if (!(p > -1.0)) throw Error(ErrorKind::InvalidArgument, "need p > -1");
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "need alpha > 0");
  const double k = std::tgamma(p + 1.0) / std::tgamma(p + alpha + 1.0);
  return ScalarFunction(PowerSum::monomial(k, p + alpha), domain,
                        "J^" + std::to_string(alpha) + " x^" + std::to_string(p));
}

}  // namespace fractel
