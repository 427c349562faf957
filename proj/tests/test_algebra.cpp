#include "test_support.hpp"

#include <cmath>

#include "fractel/algebra.hpp"
#include "fractel/sampling.hpp"

using namespace fractel;

namespace {
const Interval kUnit(0.0, 1.0);
const AffineMap1D kHalf(0.5, 0.0, kUnit);

ScalarFunction poly(std::vector<double> c) { return {PowerSum::polynomial(c), kUnit}; }

FractelWithWitness monomial(double a, int p) {
  return {Fractel::affine(kHalf, std::ldexp(1.0, -p), 0.0), ScalarFunction(PowerSum::monomial(a, p), kUnit)};
}
}  // namespace

TEST_CASE("witness is verified at construction") {
  CHECK_THROWS_KIND(FractelWithWitness(Fractel::affine(kHalf, 0.5, 0.0), poly({0, 0, 1})),
                    ErrorKind::VerificationFailed);
}

TEST_CASE("sum of x^2 and x^3") {
  const auto s = sum_fractel(monomial(1.0, 2), monomial(1.0, 3));
  REQUIRE(s.w().F().is_affine());
  CHECK(s.w().F().affine().s == doctest::Approx(0.375));
  CHECK(s.f()(0.5) == doctest::Approx(0.375));
  CHECK(verify_fractel(s.w(), poly({0, 0, 1, 1})).max_residual < 1e-14);
}

TEST_CASE("sum requires a shared l") {
  const auto a = monomial(1.0, 1);
  const FractelWithWitness b(Fractel::affine(AffineMap1D(0.25, 0.0, kUnit), 0.25, 0.0), poly({0, 1}));
  CHECK_THROWS_KIND(sum_fractel(a, b), ErrorKind::MapMismatch);
}

TEST_CASE("scaling") {
  const auto s = scale_fractel(monomial(1.0, 3), -2.5);
  CHECK(verify_fractel(s.w(), ScalarFunction(PowerSum::monomial(-2.5, 3), kUnit)).pass);
  CHECK_THROWS_KIND(scale_fractel(monomial(1.0, 3), 0.0), ErrorKind::ZeroScalar);
}

TEST_CASE("product of nonvanishing functions") {
  const auto a = polynomial_fractel({Rational(2), Rational(1)}, 0.0, 1.0);        // 2 + x
  const auto b = polynomial_fractel({Rational(1), Rational(0), Rational(3)}, 0.5, 2.0);  // 1 + 3x^2
  const FractelWithWitness b_same = polynomial_fractel({Rational(1), Rational(0), Rational(3)}, 0.0, 2.0);
  const auto p = product_fractel(a, b_same);
  CHECK_FALSE(p.w().F().is_affine());
  CHECK(verify_fractel(p.w(), poly({2, 1, 6, 3})).max_residual < 1e-12);
  CHECK_THROWS_KIND(product_fractel(a, b), ErrorKind::MapMismatch);
}

TEST_CASE("product rejects a vanishing witness") {
  CHECK_THROWS_KIND(product_fractel(monomial(1.0, 1), monomial(1.0, 2)), ErrorKind::ZeroWitness);
}

TEST_CASE("bijective construction: exp with l = x/2 gives F = sqrt(y)") {
  const ScalarFunction e([](double x) { return std::exp(x); }, kUnit);
  const ScalarFunction log_inv([](double y) { return std::log(y); }, Interval(0.5, 10.0));
  const auto w = bijective_fractel(e, log_inv, kHalf);
  CHECK(verify_fractel(w, e, 1000, 1e-12).pass);
  CHECK(w.F()(0.3, std::exp(0.8)) == doctest::Approx(std::exp(0.4)));
  // f^-1(4) = log 4 lies outside dom l = [0, 1]
  CHECK_THROWS_KIND(w.F()(0.3, 4.0), ErrorKind::NonFinite);
}

TEST_CASE("conjugation transports fractels") {
  const auto cube = monomial(1.0, 3);
  const GraphTransform T{AffineMap1D(2.0, 1.0, kUnit),
                         [](double x, double y) { return y + x; },
                         [](double x, double y) { return y - 0.5 * (x - 1.0); }};
  const auto w = conjugate_fractel(cube.w(), T);
  const auto ft = transform_function(T, cube.f());
  CHECK(ft.domain() == Interval(1.0, 3.0));
  CHECK(ft(3.0) == doctest::Approx(2.0));
  CHECK(w.l().sigma() == doctest::Approx(0.5));
  CHECK(w.l().tau() == doctest::Approx(0.5));
  CHECK(verify_fractel(w, ft, 1000, 1e-12).pass);

  const Fractel expanding(AffineMap1D(1.0, 0.0, kUnit), AffineInY{0.5, ScalarFunction::zero(kUnit)});
  CHECK_THROWS_KIND(conjugate_fractel(expanding, T), ErrorKind::NotContractive);
}

TEST_CASE("shift construction recovers f from an invertible f + g") {
  // f = x^2 through the invertible f + g = x^2 + x
  const auto g = poly({0, 1});
  const auto sum = poly({0, 1, 1});
  const ScalarFunction sum_inv([](double y) { return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * y)); },
                               Interval(0.0, 2.0));
  const auto w = shift_fractel(g, sum, sum_inv, kHalf);
  CHECK(verify_fractel(w, poly({0, 0, 1}), 1000, 1e-12).pass);
}

TEST_CASE("cartesian products") {
  const auto a = monomial(1.0, 1);
  const auto b = monomial(2.0, 2);
  const auto shared = cartesian_fractel({a.w(), b.w()}, true);
  CHECK(shared.size() == 2);
  const auto diag = shared.diagonal();
  REQUIRE(diag.has_value());
  CHECK((*diag)[0] == 0.5);
  CHECK((*diag)[1] == 0.25);
  CHECK(verify_product_fractel(shared, {a.f(), b.f()}).pass);
  CHECK_FALSE(verify_product_fractel(shared, {b.f(), a.f()}).pass);

  const auto split = cartesian_fractel({a.w(), sum_fractel(a, monomial(1.0, 1)).w()}, false);
  CHECK_FALSE(split.shared);
  CHECK(split.diagonal().has_value() == false);

  const Fractel other(AffineMap1D(0.25, 0.0, kUnit), AffineInY{0.25, ScalarFunction::zero(kUnit)});
  CHECK_THROWS_KIND(cartesian_fractel({a.w(), other}, true), ErrorKind::MapMismatch);
}

TEST_CASE("composition condition") {
  const auto sq = poly({0, 0, 1});
  CHECK(composition_condition_holds(sq, kHalf, AffineMap1D(0.25, 0.0, kUnit)));
  CHECK_FALSE(composition_condition_holds(sq, kHalf, kHalf));
}

TEST_CASE("randomized closure under sum, scale, product and composition") {
  for (std::uint64_t seed : {1u, 2u, 3u, 42u}) {
    PolynomialSampler sampler(seed);
    for (int t = 0; t < 10; ++t) {
      for (const auto& r : closure_trial(sampler, 4, 1e-9)) {
        INFO(r.operation << " seed " << seed << " residual " << r.max_residual);
        CHECK(r.pass);
      }
    }
  }
}
