#include "test_support.hpp"

#include <cmath>

#include "fractel/function.hpp"
#include "fractel/interval.hpp"

using namespace fractel;


TEST_CASE("interval rejects degenerate and non-finite bounds") {
  CHECK_THROWS_KIND(Interval(1.0, 1.0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(Interval(2.0, 1.0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(Interval(0.0, INFINITY), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(Interval(NAN, 1.0), ErrorKind::InvalidArgument);
}

TEST_CASE("interval containment honours the endpoint tolerance") {
  const Interval iv(0.0, 1.0);
  CHECK(iv.contains(1.0 + 0.5e-12));
  CHECK_FALSE(iv.contains(1.0 + 1e-9));
  CHECK(iv.contains(Interval(0.25, 0.5)));
  CHECK_FALSE(iv.contains(Interval(0.5, 1.5)));
  CHECK(iv.clamp(-3.0) == 0.0);
}

TEST_CASE("grid includes both endpoints") {
  const auto g = Interval(-1.0, 1.0).grid(5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == -1.0);
  CHECK(g[2] == doctest::Approx(0.0));
  CHECK(g.back() == 1.0);
}

TEST_CASE("intersect") {
  const auto i = intersect(Interval(0.0, 2.0), Interval(1.0, 3.0));
  CHECK(i == Interval(1.0, 2.0));
  CHECK_THROWS_KIND(intersect(Interval(0.0, 1.0), Interval(1.0, 2.0)), ErrorKind::InvalidArgument);
}

TEST_CASE("affine map basics") {
  const Interval unit(0.0, 1.0);
  CHECK_THROWS_KIND(AffineMap1D(0.0, 1.0, unit), ErrorKind::InvalidArgument);

  const AffineMap1D l(-0.5, 1.0, unit);
  CHECK(l.inverse(l(0.3)) == doctest::Approx(0.3));
  CHECK(l.image() == Interval(0.5, 1.0));
  CHECK(l.fixed_point() == doctest::Approx(2.0 / 3.0));
  CHECK(AffineMap1D::identity(unit).is_identity());

  const AffineMap1D half(0.5, 0.0, unit);
  const auto c = compose(l, half);
  CHECK(c.sigma() == doctest::Approx(-0.25));
  CHECK(c.tau() == doctest::Approx(1.0));
  CHECK(c(0.4) == doctest::Approx(l(half(0.4))));
}

TEST_CASE("power sums evaluate, combine and substitute") {
  const auto p = PowerSum::polynomial({1.0, 3.0, 2.0, 1.0});
  CHECK(p(1.2) == doctest::Approx(1151.0 / 125.0));
  double c = 0.0;
  CHECK(PowerSum::constant(4.0).is_constant(&c));
  CHECK(c == 4.0);
  CHECK_FALSE(p.is_constant());
  CHECK((p - p).simplified().is_zero());

  const auto q = p.substitute(0.5, 0.25);
  for (double x : {0.0, 0.3, 0.9}) CHECK(q(x) == doctest::Approx(p(0.5 * x + 0.25)));

  const auto r = PowerSum::monomial(2.0, 0.5) * 3.0 + PowerSum::constant(1.0);
  CHECK(r(4.0) == doctest::Approx(13.0));
}

TEST_CASE("non-integer powers clamp tiny negative bases") {
  const PowerTerm t{1.0, 1.0, -0.5, 0.5};
  CHECK(t(0.5 - 1e-15) == 0.0);
}

TEST_CASE("scalar function domain checks") {
  const Interval unit(0.0, 1.0);
  const ScalarFunction f([](double x) { return x * x; }, unit, "sq");
  CHECK(f(0.5) == 0.25);
  CHECK_THROWS_KIND(f(1.5), ErrorKind::DomainEscape);
  CHECK(f.raw(2.0) == 4.0);
  CHECK_FALSE(f.symbolic().has_value());
  CHECK(f.with_domain(Interval(0.0, 2.0))(1.5) == 2.25);
}

TEST_CASE("scalar function combinators keep symbolic forms") {
  const Interval unit(0.0, 1.0);
  const ScalarFunction a(PowerSum::polynomial({1.0, 2.0}), unit);
  const ScalarFunction b(PowerSum::monomial(1.0, 2.0), unit);
  const auto s = a + b;
  REQUIRE(s.symbolic().has_value());
  CHECK(s(0.5) == doctest::Approx(2.25));
  CHECK((a - a).is_zero());
  CHECK((2.0 * a)(0.25) == doctest::Approx(3.0));
  CHECK(multiply(a, b)(0.5) == doctest::Approx(0.5));
  const auto sub = substitute(b, 0.5, 0.5, unit);
  CHECK(sub(1.0) == doctest::Approx(1.0));
  CHECK(sub.symbolic().has_value());
  double c = 0.0;
  CHECK(ScalarFunction::constant(3.0, unit).is_constant(&c));
  CHECK(c == 3.0);
}
