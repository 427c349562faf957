#include "fractel/algebra.hpp"

#include <cmath>
#include <sstream>

namespace fractel {

namespace {

constexpr double kMapTol = 1e-12;
constexpr double kZeroWitness = 1e-14;

void require_same_map(const AffineMap1D& a, const AffineMap1D& b) {
  if (std::abs(a.sigma() - b.sigma()) > kMapTol || std::abs(a.tau() - b.tau()) > kMapTol) {
    std::ostringstream os;
    os << "l differs: (" << a.sigma() << ", " << a.tau() << ") vs (" << b.sigma() << ", "
       << b.tau() << ")";
    throw Error(ErrorKind::MapMismatch, os.str());
  }
}

AffineMap1D restrict_map(const AffineMap1D& l, const Interval& dom) {
  return AffineMap1D(l.sigma(), l.tau(), dom);
}

}  // namespace

FractelWithWitness::FractelWithWitness(Fractel w, ScalarFunction f, double tol)
    : w_(std::move(w)), f_(std::move(f)) {
  const auto report = verify_fractel(w_, f_, 1000, tol);
  if (!report.pass) {
    std::ostringstream os;
    os << "fractel does not verify for " << f_.label() << ": residual " << report.max_residual
       << " at x = " << report.worst_x;
    throw Error(ErrorKind::VerificationFailed, os.str());
  }
}

FractelWithWitness sum_fractel(const FractelWithWitness& a, const FractelWithWitness& b) {
  require_same_map(a.w().l(), b.w().l());
  const ScalarFunction& f1 = a.f();
  const ScalarFunction& f2 = b.f();
  ScalarFunction f3 = f1 + f2;
  const Interval dom = f3.domain();
  const AffineMap1D l = restrict_map(a.w().l(), dom);

  const auto* a1 = a.w().F().as_affine();
  const auto* a2 = b.w().F().as_affine();
  if (a1 != nullptr && a2 != nullptr) {
    // s1 (y - f2) + lambda1 + s2 (y - f1) + lambda2
    ScalarFunction lambda = (a1->lambda + a2->lambda) - (a1->s * f2 + a2->s * f1);
    return {Fractel::affine(l, a1->s + a2->s, lambda.with_domain(dom)), std::move(f3)};
  }
  FMap F1 = a.w().F();
  FMap F2 = b.w().F();
  Fractel w(l, GeneralF{[F1, F2, f1, f2](double x, double y) {
              return F1(x, y - f2(x)) + F2(x, y - f1(x));
            }});
  return {std::move(w), std::move(f3)};
}

FractelWithWitness scale_fractel(const FractelWithWitness& a, double c) {
  if (c == 0.0) throw Error(ErrorKind::ZeroScalar, "scale factor must be nonzero");
  ScalarFunction f4 = c * a.f();
  if (const auto* a1 = a.w().F().as_affine()) {
    // c (s y / c + lambda) = s y + c lambda
    return {Fractel::affine(a.w().l(), a1->s, c * a1->lambda), std::move(f4)};
  }
  FMap F1 = a.w().F();
  Fractel w(a.w().l(), GeneralF{[F1, c](double x, double y) { return c * F1(x, y / c); }});
  return {std::move(w), std::move(f4)};
}

FractelWithWitness product_fractel(const FractelWithWitness& a, const FractelWithWitness& b,
                                   std::size_t grid) {
  require_same_map(a.w().l(), b.w().l());
  const ScalarFunction& f1 = a.f();
  const ScalarFunction& f2 = b.f();
  const Interval dom = intersect(f1.domain(), f2.domain());
  for (double x : dom.grid(grid)) {
    if (std::abs(f1(x)) < kZeroWitness || std::abs(f2(x)) < kZeroWitness) {
      std::ostringstream os;
      os << "witness vanishes at x = " << x;
      throw Error(ErrorKind::ZeroWitness, os.str());
    }
  }
  FMap F1 = a.w().F();
  FMap F2 = b.w().F();
  Fractel w(restrict_map(a.w().l(), dom), GeneralF{[F1, F2, f1, f2](double x, double y) {
              return F1(x, y / f2(x)) * F2(x, y / f1(x));
            }});
  return {std::move(w), multiply(f1, f2)};
}

Fractel bijective_fractel(const ScalarFunction& f, const ScalarFunction& f_inverse,
                          const AffineMap1D& l) {
  const Interval ldom = l.domain();
  return Fractel(l, GeneralF{[f, f_inverse, l, ldom](double, double y) {
                   const double u = f_inverse(y);
                   if (!std::isfinite(u) || !ldom.contains(u)) {
                     std::ostringstream os;
                     os << "f^-1(" << y << ") = " << u << " leaves dom(l)";
                     throw Error(ErrorKind::NonFinite, os.str());
                   }
                   return f(l(u));
                 }});
}

Fractel conjugate_fractel(const Fractel& w, const GraphTransform& T) {
  const AffineMap1D& l = w.l();
  if (!(std::abs(l.sigma()) < 1.0)) {
    throw Error(ErrorKind::NotContractive, "T1 o l o T1^-1 is not contractive");
  }
  const AffineMap1D& t1 = T.t1;
  // T1(l(T1^-1(x))) = sigma x + a tau + b (1 - sigma) for T1(x) = a x + b.
  AffineMap1D conj(l.sigma(), t1.sigma() * l.tau() + t1.tau() * (1.0 - l.sigma()),
                   t1.image_of(l.domain()));
  FMap F = w.F();
  return Fractel(std::move(conj), GeneralF{[F, l, t1, t2 = T.t2, t2s = T.t2_star](double x,
                                                                                  double y) {
                   const double u = t1.inverse(x);
                   return t2(l(u), F(u, t2s(x, y)));
                 }});
}

ScalarFunction transform_function(const GraphTransform& T, const ScalarFunction& f) {
  const AffineMap1D t1 = T.t1;
  return ScalarFunction(
      [t1, t2 = T.t2, f](double x) {
        const double u = t1.inverse(x);
        return t2(u, f(u));
      },
      t1.image_of(f.domain()), "T[" + f.label() + "]");
}

Fractel shift_fractel(const ScalarFunction& g, const ScalarFunction& sum,
                      const ScalarFunction& sum_inverse, const AffineMap1D& l) {
  const Fractel for_sum = bijective_fractel(sum, sum_inverse, l);
  GraphTransform T{AffineMap1D::identity(l.domain()),
                   [g](double x, double y) { return y - g.raw(x); },
                   [g](double x, double y) { return y + g.raw(x); }};
  return conjugate_fractel(for_sum, T);
}

std::optional<std::vector<double>> ProductFractel::diagonal() const {
  std::vector<double> d;
  for (const auto& F : components) {
    const auto* a = F.as_affine();
    if (a == nullptr || !a->lambda.is_zero()) return std::nullopt;
    d.push_back(a->s);
  }
  return d;
}

ProductFractel cartesian_fractel(const std::vector<Fractel>& parts, bool shared_l) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "no component fractels");
  ProductFractel out;
  out.shared = shared_l;
  for (const auto& p : parts) {
    if (shared_l) {
      require_same_map(parts.front().l(), p.l());
    } else {
      out.maps.push_back(p.l());
    }
    out.components.push_back(p.F());
  }
  if (shared_l) out.maps.push_back(parts.front().l());
  return out;
}

VerificationReport verify_product_fractel(const ProductFractel& w,
                                          const std::vector<ScalarFunction>& fs, std::size_t grid,
                                          double tol) {
  if (fs.size() != w.size()) {
    throw Error(ErrorKind::InvalidArgument, "component count does not match");
  }
  VerificationReport report;
  if (w.shared) {
    Interval dom = fs.front().domain();
    for (const auto& f : fs) dom = intersect(dom, f.domain());
    const AffineMap1D& l = w.map(0);
    if (!dom.contains(l.image_of(dom))) {
      throw Error(ErrorKind::DomainEscape, "shared l leaves the common domain");
    }
    for (double x : dom.grid(grid)) {
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const double r = std::abs(w.components[i](x, fs[i](x)) - fs[i](l(x)));
        if (!std::isfinite(r)) throw Error(ErrorKind::NonFinite, "component residual");
        if (r > report.max_residual) {
          report.max_residual = r;
          report.worst_x = x;
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto r = verify_fractel(Fractel(w.map(i), w.components[i]), fs[i], grid, tol);
      if (r.max_residual > report.max_residual) {
        report.max_residual = r.max_residual;
        report.worst_x = r.worst_x;
      }
    }
  }
  report.pass = report.max_residual <= tol;
  return report;
}

bool composition_condition_holds(const ScalarFunction& f1, const AffineMap1D& l1,
                                 const AffineMap1D& l2, std::size_t grid, double tol) {
  for (double x : f1.domain().grid(grid)) {
    if (std::abs(f1(l1(x)) - l2(f1(x))) > tol) return false;
  }
  return true;
}

}  // namespace fractel
