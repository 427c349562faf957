#pragma once

#include <functional>
#include <string>
#include <variant>

#include "fractel/function.hpp"

namespace fractel {

/// F(x, y) = s * y + lambda(x)
struct AffineInY {
  double s;
  ScalarFunction lambda;
};

/// Arbitrary F(x, y).
struct GeneralF {
  std::function<double(double, double)> eval;
};

class FMap {
 public:
  FMap(AffineInY affine) : rep_(std::move(affine)) {}  // NOLINT(google-explicit-constructor)
  FMap(GeneralF general) : rep_(std::move(general)) {}  // NOLINT(google-explicit-constructor)

  double operator()(double x, double y) const;

  bool is_affine() const noexcept { return std::holds_alternative<AffineInY>(rep_); }
  const AffineInY& affine() const { return std::get<AffineInY>(rep_); }
  const AffineInY* as_affine() const noexcept { return std::get_if<AffineInY>(&rep_); }

 private:
  std::variant<AffineInY, GeneralF> rep_;
};

/// w(x, y) = (l(x), F(x, y)). The domain of the fractel is l.domain() x R.
class Fractel {
 public:
  Fractel(AffineMap1D l, FMap F) : l_(std::move(l)), F_(std::move(F)) {}

  /// w(x, y) = (l(x), s*y + lambda(x)) with lambda taking l's domain.
  static Fractel affine(AffineMap1D l, double s, ScalarFunction lambda);
  /// w(x, y) = (l(x), s*y + c)
  static Fractel affine(AffineMap1D l, double s, double c);
  /// Identity on domain x R.
  static Fractel trivial(Interval domain);

  const AffineMap1D& l() const noexcept { return l_; }
  const FMap& F() const noexcept { return F_; }
  const Interval& domain() const noexcept { return l_.domain(); }

  std::pair<double, double> operator()(double x, double y) const { return {l_(x), F_(x, y)}; }

  bool is_trivial() const;

 private:
  AffineMap1D l_;
  FMap F_;
};

struct VerificationReport {
  double max_residual = 0.0;
  double worst_x = 0.0;
  bool pass = false;
};

/// Samples |F(x, f(x)) - f(l(x))| on `grid` equispaced points of dom(f).
/// Throws DomainEscape when l(dom f) is not inside dom f and NonFinite on
/// non-finite evaluations.
VerificationReport verify_fractel(const Fractel& w, const ScalarFunction& f,
                                  std::size_t grid = 1000, double tol = 1e-10);

/// l(dom) is a strict subset of dom and |sigma| < 1.
bool check_nontrivial(const Fractel& w, const Interval& dom);

/// w1 o w2 (x, y) = (l1(l2(x)), F1(l2(x), F2(x, y))). Affine-in-y inputs give
/// an affine-in-y result. Throws DomainEscape unless l2(dom l2) is inside dom l1.
Fractel compose_fractels(const Fractel& w1, const Fractel& w2);

/// (Phi_w g)(x) = F(l^-1(x), g(l^-1(x))) on l(dom g).
ScalarFunction rb_apply(const Fractel& w, const ScalarFunction& g);

}  // namespace fractel
