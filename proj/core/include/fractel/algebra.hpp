#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fractel/fractel.hpp"

namespace fractel {

/// A fractel together with the function it was verified against. The
/// constructions below reference the witness values inside F.
class FractelWithWitness {
 public:
  /// Verifies w against f (grid 1000) and throws VerificationFailed beyond `tol`.
  FractelWithWitness(Fractel w, ScalarFunction f, double tol = 1e-9);

  const Fractel& w() const noexcept { return w_; }
  const ScalarFunction& f() const noexcept { return f_; }

 private:
  Fractel w_;
  ScalarFunction f_;
};

/// Fractel for f1 + f2: F3(x, y) = F1(x, y - f2(x)) + F2(x, y - f1(x)).
/// Both fractels must share l (within 1e-12) or MapMismatch is thrown.
FractelWithWitness sum_fractel(const FractelWithWitness& a, const FractelWithWitness& b);

/// Fractel for c * f1: F4(x, y) = c * F1(x, y / c). Throws ZeroScalar for c == 0.
FractelWithWitness scale_fractel(const FractelWithWitness& a, double c);

/// Fractel for f1 * f2: F5(x, y) = F1(x, y / f2(x)) * F2(x, y / f1(x)).
/// Throws ZeroWitness if |f1| or |f2| drops below 1e-14 on the grid.
FractelWithWitness product_fractel(const FractelWithWitness& a, const FractelWithWitness& b,
                                   std::size_t grid = 1000);

/// (l(x), f(l(f^-1(y)))) for strictly monotone f with caller-supplied inverse.
/// Evaluation throws NonFinite if f^-1(y) leaves dom(l).
Fractel bijective_fractel(const ScalarFunction& f, const ScalarFunction& f_inverse,
                          const AffineMap1D& l);

/// Invertible change of variables T(x, y) = (T1(x), T2(x, y)) with
/// T^-1(x, y) = (T1^-1(x), T2*(x, y)).
struct GraphTransform {
  AffineMap1D t1;
  std::function<double(double, double)> t2;
  std::function<double(double, double)> t2_star;
};

/// T o w o T^-1. If w is a fractel for f, the result is a fractel for
/// transform_function(T, f). Throws NotContractive unless |sigma_l| < 1.
Fractel conjugate_fractel(const Fractel& w, const GraphTransform& T);

/// f~(x) = T2(T1^-1(x), f(T1^-1(x))) on T1(dom f).
ScalarFunction transform_function(const GraphTransform& T, const ScalarFunction& f);

/// Fractel for f built from a fractel of the invertible sum f + g (shift
/// construction), realised as a conjugation by T(x, y) = (x, y - g(x)).
Fractel shift_fractel(const ScalarFunction& g, const ScalarFunction& sum,
                      const ScalarFunction& sum_inverse, const AffineMap1D& l);

/// Fractel for the vector function x -> (f1(x), ..., fn(x)) (shared l) or for
/// the cartesian product (x1, ..., xn) -> (f1(x1), ..., fn(xn)) (one l each).
struct ProductFractel {
  std::vector<AffineMap1D> maps;
  std::vector<FMap> components;
  bool shared = true;

  const AffineMap1D& map(std::size_t i) const { return shared ? maps.front() : maps.at(i); }
  std::size_t size() const noexcept { return components.size(); }

  /// If every component is y_i -> s_i y_i, the diagonal (s_0, ..., s_n).
  std::optional<std::vector<double>> diagonal() const;
};

ProductFractel cartesian_fractel(const std::vector<Fractel>& parts, bool shared_l);

/// Componentwise max residual of f_i(l_i(x)) - F_i(x, f_i(x)).
VerificationReport verify_product_fractel(const ProductFractel& w,
                                          const std::vector<ScalarFunction>& fs,
                                          std::size_t grid = 1000, double tol = 1e-10);

/// f1(l1(x)) == l2(f1(x)) on the grid of dom f1 within tol; when it holds,
/// (l1, F2(f1(x), y)) is a fractel for f2 o f1.
bool composition_condition_holds(const ScalarFunction& f1, const AffineMap1D& l1,
                                 const AffineMap1D& l2, std::size_t grid = 1000,
                                 double tol = 1e-10);

}  // namespace fractel
