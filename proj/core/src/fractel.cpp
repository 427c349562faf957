#include "fractel/fractel.hpp"

#include <cmath>
#include <sstream>

namespace fractel {

double FMap::operator()(double x, double y) const {
  if (const auto* a = std::get_if<AffineInY>(&rep_)) return a->s * y + a->lambda.raw(x);
  return std::get<GeneralF>(rep_).eval(x, y);
}

Fractel Fractel::affine(AffineMap1D l, double s, ScalarFunction lambda) {
  return Fractel(l, AffineInY{s, std::move(lambda)});
}

Fractel Fractel::affine(AffineMap1D l, double s, double c) {
  const Interval dom = l.domain();
  return Fractel(std::move(l), AffineInY{s, ScalarFunction::constant(c, dom)});
}

Fractel Fractel::trivial(Interval domain) {
  return affine(AffineMap1D::identity(domain), 1.0, 0.0);
}

bool Fractel::is_trivial() const {
  const auto* a = F_.as_affine();
  return l_.is_identity() && a != nullptr && a->s == 1.0 && a->lambda.is_zero();
}

namespace {

void require_finite(double v, const char* what, double x) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << what << " is not finite at x = " << x;
    throw Error(ErrorKind::NonFinite, os.str());
  }
}

}  // namespace

VerificationReport verify_fractel(const Fractel& w, const ScalarFunction& f, std::size_t grid,
                                  double tol) {
  const Interval& dom = f.domain();
  if (!dom.contains(w.l().image_of(dom))) {
    std::ostringstream os;
    os << "l maps [" << dom.lo() << ", " << dom.hi() << "] outside itself";
    throw Error(ErrorKind::DomainEscape, os.str());
  }
  VerificationReport report;
  for (double x : dom.grid(grid)) {
    const double fx = f(x);
    require_finite(fx, "f(x)", x);
    const double lhs = w.F()(x, fx);
    require_finite(lhs, "F(x, f(x))", x);
    const double rhs = f(w.l()(x));
    require_finite(rhs, "f(l(x))", x);
    const double r = std::abs(lhs - rhs);
    if (r > report.max_residual) {
      report.max_residual = r;
      report.worst_x = x;
    }
  }
  report.pass = report.max_residual <= tol;
  return report;
}

bool check_nontrivial(const Fractel& w, const Interval& dom) {
  const Interval img = w.l().image_of(dom);
  const bool inside = dom.contains(img);
  const bool strict = img.lo() > dom.lo() + kEndpointTol || img.hi() < dom.hi() - kEndpointTol;
  return inside && strict && std::abs(w.l().sigma()) < 1.0;
}

Fractel compose_fractels(const Fractel& w1, const Fractel& w2) {
  const AffineMap1D& l1 = w1.l();
  const AffineMap1D& l2 = w2.l();
  if (!l1.domain().contains(l2.image())) {
    throw Error(ErrorKind::DomainEscape, "l2(dom l2) is not contained in dom l1");
  }
  AffineMap1D l = compose(l1, l2);
  const auto* a1 = w1.F().as_affine();
  const auto* a2 = w2.F().as_affine();
  if (a1 != nullptr && a2 != nullptr) {
    // s1 * (s2 y + lambda2(x)) + lambda1(l2(x))
    ScalarFunction lambda =
        substitute(a1->lambda, l2.sigma(), l2.tau(), l2.domain()) + a1->s * a2->lambda;
    lambda = lambda.with_domain(l2.domain());
    return Fractel::affine(std::move(l), a1->s * a2->s, std::move(lambda));
  }
  FMap F1 = w1.F();
  FMap F2 = w2.F();
  return Fractel(std::move(l), GeneralF{[F1, F2, l2](double x, double y) {
                   return F1(l2(x), F2(x, y));
                 }});
}

ScalarFunction rb_apply(const Fractel& w, const ScalarFunction& g) {
  const AffineMap1D l = w.l();
  const FMap F = w.F();
  const Interval dom = l.image_of(g.domain());
  return ScalarFunction(
      [l, F, g](double x) {
        const double u = l.inverse(x);
        return F(u, g(u));
      },
      dom, "Phi[" + g.label() + "]");
}

}  // namespace fractel
