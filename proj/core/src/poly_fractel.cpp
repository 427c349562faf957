#include "fractel/poly_fractel.hpp"

#include <algorithm>
#include <cmath>

#include "fractel/error.hpp"

namespace fractel {

RationalMatrix binomial_matrix(const Rational& sigma, const Rational& tau, unsigned k) {
  RationalMatrix m(k + 1, k + 1);
  for (unsigned s = 0; s <= k; ++s) {
    for (unsigned t = 0; t <= s; ++t) m(s, t) = binomial(s, t) * pow(tau, s - t) * pow(sigma, t);
  }
  return m;
}

RationalPoly compose_affine(const RationalPoly& p, const Rational& sigma, const Rational& tau) {
  // Horner: q <- q * (sigma x + tau) + a_i, from the top coefficient down.
  RationalPoly q(p.size());
  for (std::size_t i = p.size(); i-- > 0;) {
    RationalPoly next(p.size());
    for (std::size_t d = 0; d + 1 < p.size(); ++d) {
      next[d] += q[d] * tau;
      next[d + 1] += q[d] * sigma;
    }
    next[0] += p[i];
    q = std::move(next);
  }
  return q;
}

Rational evaluate(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

RationalPoly row(const RationalMatrix& m, std::size_t r) {
  RationalPoly out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m(r, c);
  return out;
}

}  // namespace

bool polynomial_identity_holds(const BasisFractel& bf) {
  const RationalMatrix MT = bf.M * bf.T;
  for (std::size_t i = 0; i < bf.T.rows(); ++i) {
    if (compose_affine(row(bf.T, i), bf.sigma, bf.tau) != row(MT, i)) return false;
  }
  return true;
}

BasisFractel basis_fractel(const RationalMatrix& T, const Rational& sigma, const Rational& tau) {
  if (!T.square()) throw Error(ErrorKind::InvalidArgument, "T must be square");
  if (sigma.is_zero()) throw Error(ErrorKind::InvalidArgument, "sigma must be nonzero");
  if (T.determinant().is_zero()) throw Error(ErrorKind::SingularMatrix, "basis change T is singular");
  const auto k = static_cast<unsigned>(T.rows() - 1);
  BasisFractel bf{sigma, tau, T * binomial_matrix(sigma, tau, k) * T.inverse(), T};
  if (!polynomial_identity_holds(bf)) {
    throw Error(ErrorKind::VerificationFailed, "f o l != M f for the constructed M");
  }
  return bf;
}

RationalMatrix basis_matrix(NamedBasis basis) {
  switch (basis) {
    case NamedBasis::Monomial:
      return RationalMatrix::identity(4);
    case NamedBasis::Hat:
      return {{1, -1}, {0, 1}};
    case NamedBasis::Chebyshev3:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, 2, 0}, {0, -3, 0, 4}};
    case NamedBasis::BSpline3:
      return RationalMatrix{{0, 0, 0, 1}, {1, 3, 3, -3}, {4, 0, -6, 3}, {1, -3, 3, -1}} *
             Rational(1, 6);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown basis");
}

NamedBasis parse_named_basis(std::string_view name) {
  if (name == "monomial") return NamedBasis::Monomial;
  if (name == "hat") return NamedBasis::Hat;
  if (name == "chebyshev3") return NamedBasis::Chebyshev3;
  if (name == "bspline3") return NamedBasis::BSpline3;
  throw Error(ErrorKind::InvalidArgument, "unknown basis '" + std::string(name) + "'");
}

std::string_view to_string(NamedBasis basis) {
  switch (basis) {
    case NamedBasis::Monomial: return "monomial";
    case NamedBasis::Hat: return "hat";
    case NamedBasis::Chebyshev3: return "chebyshev3";
    case NamedBasis::BSpline3: return "bspline3";
  }
  return "?";
}

std::vector<ScalarFunction> basis_functions(const RationalMatrix& T) {
  std::vector<ScalarFunction> fs;
  const auto rows = T.to_double();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    fs.emplace_back(PowerSum::polynomial(rows[i]), Interval(0.0, 1.0), "f" + std::to_string(i));
  }
  return fs;
}

SemigroupMembership semigroup_member(const Rational& sigma, const Rational& tau,
                                     FunctionSpace space) {
  const Rational l0 = tau;
  const Rational l1 = sigma + tau;
  const Rational lo = std::min(l0, l1);
  const Rational hi = std::max(l0, l1);
  if (sigma.is_zero() || lo < Rational(0) || hi > Rational(1)) {
    throw Error(ErrorKind::NotInSemigroup,
                "l(x) = " + sigma.str() + " x + " + tau.str() + " does not map [0,1] into itself");
  }
  if (space == FunctionSpace::PolyK) {
    return {true, 0, "every affine self-map of [0,1] preserves polynomials of degree <= k"};
  }
  const Rational half(1, 2);
  if (hi <= half) return {true, 1, "l([0,1]) lies in [0, 1/2]"};
  if (lo >= half) return {true, 2, "l([0,1]) lies in [1/2, 1]"};
  if (sigma * half + tau == half) return {true, 3, "l(1/2) = 1/2"};
  return {false, 0,
          "l([0,1]) = [" + lo.str() + ", " + hi.str() + "] crosses 1/2 and l(1/2) = " +
              (sigma * half + tau).str()};
}

FixedPointReport fixed_point_analysis(const BasisFractel& bf, const std::vector<ScalarFunction>& f,
                                      std::size_t grid) {
  const std::size_t m = bf.dimension();
  if (f.size() != m) throw Error(ErrorKind::InvalidArgument, "need one function per basis element");
  FixedPointReport rep;
  if (bf.sigma == Rational(1)) {
    rep.every_point_fixed = bf.tau.is_zero();
    rep.x_star = 0.0;
  } else {
    rep.x_star = (bf.tau / (Rational(1) - bf.sigma)).to_double();
  }

  const auto Md = bf.M.to_double();
  std::vector<double> fx(m);
  for (std::size_t i = 0; i < m; ++i) fx[i] = f[i](rep.x_star);
  rep.f_star_zero = std::all_of(fx.begin(), fx.end(), [](double v) { return std::abs(v) <= 1e-14; });
  for (std::size_t r = 0; r < m; ++r) {
    double v = 0.0;
    for (std::size_t c = 0; c < m; ++c) v += Md[r][c] * fx[c];
    rep.residual = std::max(rep.residual, std::abs(v - fx[r]));
  }

  // Left eigenvectors for eigenvalue 1: kernel of (M - I)^T.
  const auto kernel = (bf.M - RationalMatrix::identity(m)).transpose().kernel();
  rep.eig1_multiplicity = kernel.size();
  if (!kernel.empty()) {
    rep.eig1_left = kernel.front();
    std::vector<double> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = (*rep.eig1_left)[i].to_double();
    double lo = INFINITY;
    double hi = -INFINITY;
    for (double x : f.front().domain().grid(grid)) {
      double u = 0.0;
      for (std::size_t i = 0; i < m; ++i) u += c[i] * f[i](x);
      lo = std::min(lo, u);
      hi = std::max(hi, u);
    }
    rep.u0_constant = hi - lo <= 1e-10;
  }
  return rep;
}

bool stochastic_check(const RationalMatrix& M) {
  for (std::size_t c = 0; c < M.cols(); ++c) {
    Rational sum = 0;
    for (std::size_t r = 0; r < M.rows(); ++r) {
      if (M(r, c) < Rational(0)) return false;
      sum += M(r, c);
    }
    if (sum != Rational(1)) return false;
  }
  return true;
}

VectorFunction stack(const std::vector<ScalarFunction>& fs) {
  if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "empty function vector");
  Interval dom = fs.front().domain();
  for (const auto& f : fs) dom = intersect(dom, f.domain());
  return {[fs](double x) {
            std::vector<double> out;
            out.reserve(fs.size());
            for (const auto& f : fs) out.push_back(f(x));
            return out;
          },
          dom, fs.size()};
}

namespace {

std::vector<double> mat_apply(const std::vector<std::vector<double>>& A, const std::vector<double>& v) {
  std::vector<double> out(A.size(), 0.0);
  for (std::size_t r = 0; r < A.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += A[r][c] * v[c];
  }
  return out;
}

RationalMatrix resolvent(const RationalMatrix& M) {
  const RationalMatrix A = RationalMatrix::identity(M.rows()) - M;
  if (A.determinant().is_zero()) {
    throw Error(ErrorKind::EigOne, "I - M is singular: M has eigenvalue 1");
  }
  return A.inverse();
}

}  // namespace

VectorFunction vector_valued_G(const std::vector<ScalarFunction>& f, const RationalMatrix& M,
                               double tau, const Interval& domain) {
  if (f.size() != M.rows()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  if (!domain.contains(tau)) throw Error(ErrorKind::InvalidArgument, "tau must lie in the domain");
  const auto inv = resolvent(M).to_double();
  const auto Md = M.to_double();
  const VectorFunction fv = stack(f);
  return {[inv, Md, fv, tau](double x) {
            const auto shifted = fv(0.5 * (x + tau));
            const auto mf = mat_apply(Md, fv(x));
            std::vector<double> d(shifted.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = shifted[i] - mf[i];
            return mat_apply(inv, d);
          },
          domain, f.size()};
}

VectorFunction vector_valued_G_first_order(const std::vector<ScalarFunction>& f,
                                           const std::vector<ScalarFunction>& f_prime,
                                           const RationalMatrix& M, double tau,
                                           const Interval& domain) {
  if (f.size() != M.rows() || f_prime.size() != f.size()) {
    throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  }
  const auto inv = resolvent(M).to_double();
  const VectorFunction fv = stack(f);
  const auto slope = mat_apply(inv, stack(f_prime)(domain.midpoint()));
  return {[fv, slope, tau](double x) {
            auto g = fv(x);
            for (std::size_t i = 0; i < g.size(); ++i) g[i] += 0.5 * (tau - x) * slope[i];
            return g;
          },
          domain, f.size()};
}

double verify_vector_fractel(const std::vector<ScalarFunction>& f, const RationalMatrix& M,
                             double tau, const VectorFunction& G, std::size_t grid) {
  const auto Md = M.to_double();
  const VectorFunction fv = stack(f);
  const std::size_t m = f.size();
  double worst = 0.0;
  for (double x : G.domain.grid(grid)) {
    const auto lhs = fv(0.5 * (x + tau));
    const auto mf = mat_apply(Md, fv(x));
    const auto g = G(x);
    const auto mg = mat_apply(Md, g);
    for (std::size_t i = 0; i < m; ++i) {
      worst = std::max(worst, std::abs(lhs[i] - (mf[i] + g[i] - mg[i])));
    }
  }
  return worst;
}

std::vector<ScalarFunction> shifted_values(const ScalarFunction& u, double h, std::size_t count) {
  std::vector<ScalarFunction> out;
  const Interval dom = u.domain();
  for (std::size_t j = 0; j < count; ++j) {
    const double shift = h * static_cast<double>(j);
    const Interval shifted(dom.lo(), dom.hi() - shift);
    out.push_back(substitute(u, 1.0, shift, shifted));
  }
  return out;
}

std::vector<ScalarFunction> with_basis(std::vector<ScalarFunction> basis, const ScalarFunction& u) {
  basis.push_back(u);
  return basis;
}

std::vector<ScalarFunction> function_and_derivative(const ScalarFunction& u,
                                                    const ScalarFunction& u_prime) {
  return {u, u_prime};
}

}  // namespace fractel
