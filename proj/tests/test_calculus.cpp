#include "test_support.hpp"

#include <cmath>

#include "fractel/calculus.hpp"
#include "fractel/rational.hpp"

using namespace fractel;

namespace {
const Interval kUnit(0.0, 1.0);
ScalarFunction poly(std::vector<double> c) { return {PowerSum::polynomial(c), kUnit}; }
}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_KIND(AffineFractelSX(0.0, 0.5, poly({0})), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(AffineFractelSX(1.0, 0.5, poly({0})), ErrorKind::InvalidArgument);
  CHECK(AffineFractelSX(0.5, 0.25, poly({0})).contractive_in_y());
  CHECK_FALSE(AffineFractelSX(0.5, 1.5, poly({0})).contractive_in_y());
}

TEST_CASE("x^2 + x: derivative and integral fractels verify") {
  // f(x/2) = f(x)/4 + x/4
  const AffineFractelSX w(0.5, 0.25, poly({0, 0.25}));
  REQUIRE(verify_fractel(w.to_fractel(), poly({0, 1, 1})).pass);

  const auto d = derivative_fractel(w, poly({0.25}));
  CHECK(d.s() == 0.5);
  CHECK(d.c() == 0.5);
  CHECK(verify_fractel(d.to_fractel(), poly({1, 2}), 1000, 1e-14).pass);

  const auto i = integral_fractel(w, poly({0, 0, 0.125}));
  CHECK(i.c() == 0.125);
  CHECK(verify_fractel(i.to_fractel(), poly({0, 0, 0.5, 1.0 / 3.0}), 1000, 1e-14).pass);
}

TEST_CASE("derivative may lose contractivity") {
  // x: (x/2, y/2); derivative 1: (x/2, c/s = 1)
  const AffineFractelSX w(0.5, 0.5, poly({0}));
  const auto d = derivative_fractel(w, poly({0}));
  CHECK(d.c() == 1.0);
  CHECK_FALSE(d.contractive_in_y());
}

TEST_CASE("power law bookkeeping is exact over the rationals") {
  const Rational s(1, 3);
  for (unsigned p = 1; p <= 6; ++p) {
    const Rational c = pow(s, p);
    const auto [ds, dc] = derivative_coefficients(s, c);
    CHECK(ds == s);
    CHECK(dc == pow(s, p - 1));
    const auto [is, ic] = integral_coefficients(s, c);
    CHECK(is == s);
    CHECK(ic == pow(s, p + 1));
    CHECK(derivative_coefficients(is, ic) == std::pair{s, c});
  }
}

TEST_CASE("numeric derivative and antiderivative") {
  const ScalarFunction f([](double x) { return std::sin(3.0 * x); }, kUnit);
  const auto df = numeric_derivative(f);
  for (double x : {0.1, 0.4, 0.9}) CHECK(df(x) == doctest::Approx(3.0 * std::cos(3.0 * x)).epsilon(1e-8));
  // one-sided at the endpoints: first order in h
  for (double x : {0.0, 1.0}) CHECK(df(x) == doctest::Approx(3.0 * std::cos(3.0 * x)).epsilon(1e-4));
  const auto F = numeric_antiderivative(f);
  for (double x : {0.0, 0.4, 1.0}) {
    CHECK(F(x) == doctest::Approx((1.0 - std::cos(3.0 * x)) / 3.0).epsilon(1e-9));
  }
  CHECK_THROWS_KIND(numeric_antiderivative(f, 3), ErrorKind::InvalidArgument);
}

TEST_CASE("Riemann-Liouville integral of monomials") {
  const auto j1 = riemann_liouville_monomial(2.0, 1.0, kUnit);
  CHECK(j1(0.6) == doctest::Approx(std::pow(0.6, 3) / 3.0));
  const auto jh = riemann_liouville_monomial(0.0, 0.5, kUnit);
  CHECK(jh(0.25) == doctest::Approx(2.0 * 0.5 / std::sqrt(M_PI)));
  CHECK_THROWS_KIND(riemann_liouville_monomial(-1.0, 0.5, kUnit), ErrorKind::InvalidArgument);
}

TEST_CASE("fractional integral: alpha = 1 reproduces the integral fractel") {
  const AffineFractelSX w(0.5, 0.25, poly({0, 0.25}));
  const auto g_int = poly({0, 0, 0.125});
  const auto a = integral_fractel(w, g_int);
  const auto b = fractional_integral_fractel(w, 1.0, g_int);
  CHECK(a.s() == b.s());
  CHECK(a.c() == b.c());
  for (double x : {0.0, 0.3, 0.9}) CHECK(a.g()(x) == b.g()(x));
}

TEST_CASE("fractional integral of x^2 with alpha = 1/2") {
  // x^2 = (x/2, y/4), g = 0
  const AffineFractelSX w(0.5, 0.25, ScalarFunction::zero(kUnit));
  const auto ja = fractional_integral_fractel(w, 0.5, ScalarFunction::zero(kUnit));
  CHECK(ja.c() == doctest::Approx(0.25 * std::sqrt(0.5)));
  const auto oracle = riemann_liouville_monomial(2.0, 0.5, kUnit);
  CHECK(verify_fractel(ja.to_fractel(), oracle, 1000, 1e-12).pass);
}
