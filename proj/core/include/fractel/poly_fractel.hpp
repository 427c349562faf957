#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractel/function.hpp"
#include "fractel/rational_matrix.hpp"

namespace fractel {

/// Lower-triangular (k+1)x(k+1) matrix with entries C(s,t) tau^(s-t) sigma^t,
/// so that (1, l(x), ..., l(x)^k) = M_l (1, x, ..., x^k) for l(x) = sigma x + tau.
RationalMatrix binomial_matrix(const Rational& sigma, const Rational& tau, unsigned k);

/// Polynomial in the monomial basis, coefficients a0 .. an.
using RationalPoly = RationalVector;

/// Coefficients of p(sigma x + tau), by Horner's scheme in the polynomial ring.
RationalPoly compose_affine(const RationalPoly& p, const Rational& sigma, const Rational& tau);
Rational evaluate(const RationalPoly& p, const Rational& x);

/// Affine fractel (l, M) of the basis vector f(x) = T (1, x, ..., x^k)^T:
/// f(sigma x + tau) = M f(x) with M = T M_l T^-1.
struct BasisFractel {
  Rational sigma;
  Rational tau;
  RationalMatrix M;
  RationalMatrix T;

  std::size_t dimension() const noexcept { return M.rows(); }
};

/// Builds M = T binomial_matrix(sigma, tau, k) T^-1 and checks f o l = M f by
/// exact coefficient comparison. Throws SingularMatrix when T is singular.
BasisFractel basis_fractel(const RationalMatrix& T, const Rational& sigma, const Rational& tau);

/// Exact check that row i of T composed with l equals row i of M T.
bool polynomial_identity_holds(const BasisFractel& bf);

/// Row i of T holds the monomial coefficients of basis function i.
enum class NamedBasis { Monomial, Hat, Chebyshev3, BSpline3 };
RationalMatrix basis_matrix(NamedBasis basis);
NamedBasis parse_named_basis(std::string_view name);
std::string_view to_string(NamedBasis basis);

/// The basis functions x -> (T (1, x, ..., x^k))_i on [0, 1].
std::vector<ScalarFunction> basis_functions(const RationalMatrix& T);

enum class FunctionSpace { PolyK, PiecewiseLinearHalf };

struct SemigroupMembership {
  bool member = false;
  int condition = 0;  // 1: l([0,1]) in [0,1/2], 2: in [1/2,1], 3: l(1/2) = 1/2; 0 otherwise
  std::string reason;
};

/// Membership of l(x) = sigma x + tau in the fractel semigroup of the space.
/// Throws NotInSemigroup unless sigma != 0 and l([0, 1]) lies in [0, 1].
SemigroupMembership semigroup_member(const Rational& sigma, const Rational& tau,
                                     FunctionSpace space);

struct FixedPointReport {
  double x_star = 0.0;
  bool every_point_fixed = false;  // sigma = 1, tau = 0
  double residual = 0.0;           // ||M f(x*) - f(x*)||_inf
  bool f_star_zero = false;
  std::optional<RationalVector> eig1_left;  // c with c^T M = c^T
  std::size_t eig1_multiplicity = 0;        // dimension of that left eigenspace
  bool u0_constant = false;                 // c^T f constant on a grid within 1e-10
};

FixedPointReport fixed_point_analysis(const BasisFractel& bf, const std::vector<ScalarFunction>& f,
                                      std::size_t grid = 1000);

/// Nonnegative entries and every column summing to one.
bool stochastic_check(const RationalMatrix& M);

/// R^m-valued function on an interval.
struct VectorFunction {
  std::function<std::vector<double>(double)> eval;
  Interval domain;
  std::size_t dim;

  std::vector<double> operator()(double x) const { return eval(x); }
};

VectorFunction stack(const std::vector<ScalarFunction>& fs);

/// G(x) = (I - M)^-1 (f((x + tau)/2) - M f(x)), so that
/// w(x, y) = ((x + tau)/2, M y + (I - M) G(x)) is a fractel for f.
/// Throws EigOne when I - M is singular.
VectorFunction vector_valued_G(const std::vector<ScalarFunction>& f, const RationalMatrix& M,
                               double tau, const Interval& domain);

/// First-order model G(x) ~ f(x) + ((tau - x)/2) (I - M)^-1 f'((a + b)/2).
VectorFunction vector_valued_G_first_order(const std::vector<ScalarFunction>& f,
                                           const std::vector<ScalarFunction>& f_prime,
                                           const RationalMatrix& M, double tau,
                                           const Interval& domain);

/// max over the grid and components of |f(l(x)) - M f(x) - (I - M) G(x)|.
double verify_vector_fractel(const std::vector<ScalarFunction>& f, const RationalMatrix& M,
                             double tau, const VectorFunction& G, std::size_t grid = 1000);

// Vector choices for approximating a scalar u.
std::vector<ScalarFunction> shifted_values(const ScalarFunction& u, double h, std::size_t count);
std::vector<ScalarFunction> with_basis(std::vector<ScalarFunction> basis, const ScalarFunction& u);
std::vector<ScalarFunction> function_and_derivative(const ScalarFunction& u,
                                                    const ScalarFunction& u_prime);

}  // namespace fractel
