#include "test_support.hpp"

#include <cmath>
#include <random>

#include "fractel/poly_fractel.hpp"

using namespace fractel;

namespace {
const Rational h(1, 2);
const Rational q(1, 4);
const Rational e(1, 8);
}  // namespace

TEST_CASE("binomial matrix entries") {
  const auto m = binomial_matrix(Rational(2), Rational(3), 3);
  // row s: C(s,t) tau^(s-t) sigma^t
  CHECK(m(3, 0) == Rational(27));
  CHECK(m(3, 1) == Rational(54));
  CHECK(m(3, 2) == Rational(36));
  CHECK(m(3, 3) == Rational(8));
  CHECK(m(0, 1) == Rational(0));
  CHECK(binomial_matrix(Rational(1), Rational(0), 4) == RationalMatrix::identity(5));
}

TEST_CASE("binomial matrix is a semigroup homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> n(-5, 5), d(1, 6);
  for (int i = 0; i < 30; ++i) {
    const Rational s1(n(rng), d(rng)), t1(n(rng), d(rng)), s2(n(rng), d(rng)), t2(n(rng), d(rng));
    const unsigned k = static_cast<unsigned>(i % 6);
    // (l1 o l2)(x) = s1 s2 x + s1 t2 + t1
    CHECK(binomial_matrix(s1 * s2, s1 * t2 + t1, k) ==
          binomial_matrix(s1, t1, k) * binomial_matrix(s2, t2, k));
  }
}

TEST_CASE("polynomial composition and evaluation") {
  const RationalPoly p{1, 3, 2, 1};
  CHECK(evaluate(p, Rational(6, 5)) == Rational(1151, 125));
  const auto c = compose_affine(p, h, h);
  for (long i = 0; i <= 4; ++i) {
    const Rational x(i, 4);
    CHECK(evaluate(c, x) == evaluate(p, h * x + h));
  }
}

TEST_CASE("monomial basis matrices") {
  const auto m1 = basis_fractel(basis_matrix(NamedBasis::Monomial), h, 0).M;
  CHECK(m1 == RationalMatrix::diagonal({1, h, q, e}));
  const auto m2 = basis_fractel(basis_matrix(NamedBasis::Monomial), h, h).M;
  CHECK(m2 == RationalMatrix{{1, 0, 0, 0}, {h, h, 0, 0}, {q, h, q, 0}, {e, Rational(3, 8), Rational(3, 8), e}});
}

TEST_CASE("hat basis matrices are stochastic") {
  const auto T = basis_matrix(NamedBasis::Hat);
  const auto m1 = basis_fractel(T, h, 0).M;
  const auto m2 = basis_fractel(T, h, h).M;
  CHECK(m1 == RationalMatrix{{1, h}, {0, h}});
  CHECK(m2 == RationalMatrix{{h, 0}, {h, 1}});
  CHECK(stochastic_check(m1));
  CHECK(stochastic_check(m2));
  // general form [[1 - tau, 1 - tau - sigma], [tau, tau + sigma]]
  const Rational s(1, 3), t(1, 5);
  CHECK(basis_fractel(T, s, t).M == RationalMatrix{{1 - t, 1 - t - s}, {t, t + s}});
}

TEST_CASE("Chebyshev basis matrices") {
  const auto T = basis_matrix(NamedBasis::Chebyshev3);
  CHECK(basis_fractel(T, h, 0).M ==
        RationalMatrix{{1, 0, 0, 0}, {0, h, 0, 0}, {Rational(-3, 4), 0, q, 0}, {0, Rational(-9, 8), 0, e}});
  CHECK(basis_fractel(T, h, h).M == RationalMatrix{{1, 0, 0, 0},
                                                   {h, h, 0, 0},
                                                   {-q, 1, q, 0},
                                                   {-q, Rational(3, 8), Rational(3, 4), e}});
  CHECK_FALSE(stochastic_check(basis_fractel(T, h, 0).M));
}

TEST_CASE("B-spline basis matrices are stochastic") {
  const auto T = basis_matrix(NamedBasis::BSpline3);
  const auto m1 = basis_fractel(T, h, 0).M;
  const auto m2 = basis_fractel(T, h, h).M;
  const Rational tq(3, 4);
  CHECK(m1 == RationalMatrix{{e, 0, 0, 0}, {tq, h, e, 0}, {e, h, tq, h}, {0, 0, e, h}});
  CHECK(m2 == RationalMatrix{{h, e, 0, 0}, {h, tq, h, e}, {0, e, h, tq}, {0, 0, 0, e}});
  CHECK(stochastic_check(m1));
  CHECK(stochastic_check(m2));
}

TEST_CASE("basis construction checks") {
  CHECK_THROWS_KIND(basis_fractel(RationalMatrix{{1, 1}, {2, 2}}, h, 0), ErrorKind::SingularMatrix);
  const auto bf = basis_fractel(basis_matrix(NamedBasis::Chebyshev3), Rational(1, 3), Rational(1, 7));
  CHECK(polynomial_identity_holds(bf));
  CHECK(parse_named_basis("bspline3") == NamedBasis::BSpline3);
  CHECK(to_string(NamedBasis::Hat) == "hat");
  CHECK_THROWS_KIND(parse_named_basis("legendre"), ErrorKind::InvalidArgument);
  const auto fs = basis_functions(basis_matrix(NamedBasis::Chebyshev3));
  REQUIRE(fs.size() == 4);
  CHECK(fs[3](0.5) == doctest::Approx(4 * 0.125 - 1.5));
}

TEST_CASE("semigroup membership") {
  CHECK_THROWS_KIND(semigroup_member(0, h, FunctionSpace::PolyK), ErrorKind::NotInSemigroup);
  CHECK_THROWS_KIND(semigroup_member(h, Rational(3, 4), FunctionSpace::PolyK), ErrorKind::NotInSemigroup);
  CHECK(semigroup_member(Rational(-1), 1, FunctionSpace::PolyK).member);
  const auto pl = FunctionSpace::PiecewiseLinearHalf;
  CHECK(semigroup_member(h, 0, pl).condition == 1);
  CHECK(semigroup_member(h, h, pl).condition == 2);
  CHECK(semigroup_member(Rational(-1), 1, pl).condition == 3);
  const auto no = semigroup_member(Rational(3, 4), 0, pl);
  CHECK_FALSE(no.member);
  CHECK_FALSE(no.reason.empty());
}

TEST_CASE("fixed point analysis of a stochastic basis fractel") {
  const auto T = basis_matrix(NamedBasis::Hat);
  const auto bf = basis_fractel(T, h, 0);
  const auto rep = fixed_point_analysis(bf, basis_functions(T));
  CHECK(rep.x_star == 0.0);
  CHECK(rep.residual < 1e-15);
  CHECK_FALSE(rep.f_star_zero);
  REQUIRE(rep.eig1_left.has_value());
  CHECK(rep.eig1_multiplicity == 1);
  // c = (1, 1) and c^T f = 1 is constant
  CHECK((*rep.eig1_left)[0] == (*rep.eig1_left)[1]);
  CHECK(rep.u0_constant);

  const auto id = fixed_point_analysis(basis_fractel(T, 1, 0), basis_functions(T));
  CHECK(id.every_point_fixed);
  CHECK(id.eig1_multiplicity == 2);
}

TEST_CASE("vector-valued G") {
  const Interval unit(0.0, 1.0);
  const ScalarFunction u([](double x) { return std::exp(x); }, unit);
  const ScalarFunction up([](double x) { return std::exp(x); }, unit);
  const auto f = function_and_derivative(u, up);
  const RationalMatrix M{{q, 0}, {0, q}};
  const auto G = vector_valued_G(f, M, 0.0, unit);
  CHECK(G.dim == 2);
  CHECK(verify_vector_fractel(f, M, 0.0, G) < 1e-14);

  const auto G1 = vector_valued_G_first_order(f, {up, up}, M, 0.0, unit);
  const double err = verify_vector_fractel(f, M, 0.0, G1);
  CHECK(err > 1e-6);
  CHECK(err < 0.5);

  CHECK_THROWS_KIND(vector_valued_G(f, RationalMatrix{{1, 0}, {0, q}}, 0.0, unit), ErrorKind::EigOne);

  CHECK(shifted_values(u, 0.1, 3).size() == 3);
  CHECK(with_basis(basis_functions(basis_matrix(NamedBasis::Hat)), u).size() == 3);
}
