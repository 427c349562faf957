#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fractel/interval.hpp"

namespace fractel {

/// One term coef * (slope * x + offset)^exponent.
struct PowerTerm {
  double coef = 0.0;
  double slope = 1.0;
  double offset = 0.0;
  double exponent = 1.0;

  double operator()(double x) const;
  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// Finite sum of power terms. Closed under addition, scaling and affine
/// substitution of x, which is all the symbolic bookkeeping the fractel
/// constructions need (polynomials, a*x^p, the square-root pieces).
class PowerSum {
 public:
  PowerSum() = default;
  explicit PowerSum(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {}

  static PowerSum constant(double c);
  static PowerSum monomial(double coef, double exponent);
  /// a0 + a1 x + ... + an x^n
  static PowerSum polynomial(const std::vector<double>& coeffs);

  double operator()(double x) const;

  const std::vector<PowerTerm>& terms() const noexcept { return terms_; }

  /// True when every term is x-independent; the sum of those constants goes to `value`.
  bool is_constant(double* value = nullptr) const;
  bool is_zero() const;

  PowerSum operator+(const PowerSum& other) const;
  PowerSum operator-(const PowerSum& other) const;
  PowerSum operator*(double c) const;
  /// x -> p(sigma * x + tau)
  PowerSum substitute(double sigma, double tau) const;
  /// Drops zero-coefficient terms and folds constant terms together.
  PowerSum simplified() const;

 private:
  std::vector<PowerTerm> terms_;
};

/// Real function on an interval. Evaluation outside the domain (beyond the
/// endpoint tolerance) throws DomainEscape. When the function is known in
/// closed form the PowerSum is carried alongside for symbolic use.
class ScalarFunction {
 public:
  using Eval = std::function<double(double)>;

  ScalarFunction(Eval eval, Interval domain, std::string label = {});
  ScalarFunction(PowerSum symbolic, Interval domain, std::string label = {});

  static ScalarFunction constant(double c, Interval domain);
  static ScalarFunction zero(Interval domain) { return constant(0.0, domain); }

  double operator()(double x) const;
  /// Evaluation without the domain check.
  double raw(double x) const { return eval_(x); }

  const Interval& domain() const noexcept { return domain_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<PowerSum>& symbolic() const noexcept { return symbolic_; }

  bool is_constant(double* value = nullptr) const;
  bool is_zero() const;

  ScalarFunction with_domain(Interval domain) const;

 private:
  Eval eval_;
  Interval domain_;
  std::string label_;
  std::optional<PowerSum> symbolic_;
};

// Pointwise combinators. Symbolic forms propagate when both sides have one.
ScalarFunction operator+(const ScalarFunction& a, const ScalarFunction& b);
ScalarFunction operator-(const ScalarFunction& a, const ScalarFunction& b);
ScalarFunction operator*(double c, const ScalarFunction& a);
ScalarFunction multiply(const ScalarFunction& a, const ScalarFunction& b);
/// x -> f(sigma * x + tau) on `domain`.
ScalarFunction substitute(const ScalarFunction& f, double sigma, double tau, Interval domain);

}  // namespace fractel
