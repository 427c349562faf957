#include "fractel/function.hpp"

#include <cmath>
#include <sstream>

namespace fractel {

double PowerTerm::operator()(double x) const {
  if (exponent == 0.0) return coef;
  double base = slope * x + offset;
  if (exponent == 1.0) return coef * base;
  // Rounding can push a base that is analytically 0 slightly negative.
  if (base < 0.0 && base > -1e-14 && std::floor(exponent) != exponent) base = 0.0;
  return coef * std::pow(base, exponent);
}

PowerSum PowerSum::constant(double c) { return PowerSum({{c, 1.0, 0.0, 0.0}}); }

PowerSum PowerSum::monomial(double coef, double exponent) {
  return PowerSum({{coef, 1.0, 0.0, exponent}});
}

PowerSum PowerSum::polynomial(const std::vector<double>& coeffs) {
  std::vector<PowerTerm> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) terms.push_back({coeffs[i], 1.0, 0.0, static_cast<double>(i)});
  }
  return PowerSum(std::move(terms));
}

double PowerSum::operator()(double x) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t(x);
  return sum;
}

bool PowerSum::is_constant(double* value) const {
  double c = 0.0;
  for (const auto& t : terms_) {
    if (t.coef == 0.0) continue;
    if (t.exponent != 0.0 && t.slope != 0.0) return false;
    c += t(0.0);
  }
  if (value != nullptr) *value = c;
  return true;
}

bool PowerSum::is_zero() const {
  double c = 0.0;
  return is_constant(&c) && c == 0.0;
}

PowerSum PowerSum::operator+(const PowerSum& other) const {
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return PowerSum(std::move(terms)).simplified();
}

PowerSum PowerSum::operator-(const PowerSum& other) const { return *this + other * -1.0; }

PowerSum PowerSum::operator*(double c) const {
  auto terms = terms_;
  for (auto& t : terms) t.coef *= c;
  return PowerSum(std::move(terms)).simplified();
}

PowerSum PowerSum::substitute(double sigma, double tau) const {
  auto terms = terms_;
  for (auto& t : terms) {
    // slope*(sigma x + tau) + offset
    t.offset += t.slope * tau;
    t.slope *= sigma;
  }
  return PowerSum(std::move(terms)).simplified();
}

PowerSum PowerSum::simplified() const {
  std::vector<PowerTerm> out;
  double constant_part = 0.0;
  bool has_constant = false;
  for (const auto& t : terms_) {
    if (t.coef == 0.0) continue;
    if (t.exponent == 0.0 || t.slope == 0.0) {
      constant_part += t(0.0);
      has_constant = true;
      continue;
    }
    auto same = std::find_if(out.begin(), out.end(), [&](const PowerTerm& o) {
      return o.slope == t.slope && o.offset == t.offset && o.exponent == t.exponent;
    });
    if (same != out.end()) {
      same->coef += t.coef;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const PowerTerm& t) { return t.coef == 0.0; });
  if (has_constant && constant_part != 0.0) out.insert(out.begin(), {constant_part, 1.0, 0.0, 0.0});
  return PowerSum(std::move(out));
}

ScalarFunction::ScalarFunction(Eval eval, Interval domain, std::string label)
    : eval_(std::move(eval)), domain_(domain), label_(std::move(label)) {}

ScalarFunction::ScalarFunction(PowerSum symbolic, Interval domain, std::string label)
    : eval_([symbolic](double x) { return symbolic(x); }),
      domain_(domain),
      label_(std::move(label)),
      symbolic_(std::move(symbolic)) {}

ScalarFunction ScalarFunction::constant(double c, Interval domain) {
  std::ostringstream os;
  os << c;
  return ScalarFunction(PowerSum::constant(c), domain, os.str());
}

double ScalarFunction::operator()(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream os;
    os << "x = " << x << " outside [" << domain_.lo() << ", " << domain_.hi() << "]";
    if (!label_.empty()) os << " of " << label_;
    throw Error(ErrorKind::DomainEscape, os.str());
  }
  return eval_(x);
}

bool ScalarFunction::is_constant(double* value) const {
  return symbolic_.has_value() && symbolic_->is_constant(value);
}

bool ScalarFunction::is_zero() const { return symbolic_.has_value() && symbolic_->is_zero(); }

ScalarFunction ScalarFunction::with_domain(Interval domain) const {
  ScalarFunction out = *this;
  out.domain_ = domain;
  return out;
}

namespace {

std::string join_label(const std::string& a, const char* op, const std::string& b) {
  return "(" + a + " " + op + " " + b + ")";
}

}  // namespace

ScalarFunction operator+(const ScalarFunction& a, const ScalarFunction& b) {
  const Interval dom = intersect(a.domain(), b.domain());
  const auto label = join_label(a.label(), "+", b.label());
  if (a.symbolic() && b.symbolic()) return ScalarFunction(*a.symbolic() + *b.symbolic(), dom, label);
  return ScalarFunction([a, b](double x) { return a.raw(x) + b.raw(x); }, dom, label);
}

ScalarFunction operator-(const ScalarFunction& a, const ScalarFunction& b) {
  const Interval dom = intersect(a.domain(), b.domain());
  const auto label = join_label(a.label(), "-", b.label());
  if (a.symbolic() && b.symbolic()) return ScalarFunction(*a.symbolic() - *b.symbolic(), dom, label);
  return ScalarFunction([a, b](double x) { return a.raw(x) - b.raw(x); }, dom, label);
}

ScalarFunction operator*(double c, const ScalarFunction& a) {
  std::ostringstream os;
  os << c << "*" << a.label();
  if (a.symbolic()) return ScalarFunction(*a.symbolic() * c, a.domain(), os.str());
  return ScalarFunction([a, c](double x) { return c * a.raw(x); }, a.domain(), os.str());
}

ScalarFunction multiply(const ScalarFunction& a, const ScalarFunction& b) {
  return ScalarFunction([a, b](double x) { return a.raw(x) * b.raw(x); },
                        intersect(a.domain(), b.domain()), join_label(a.label(), "*", b.label()));
}

ScalarFunction substitute(const ScalarFunction& f, double sigma, double tau, Interval domain) {
  std::ostringstream os;
  os << f.label() << "(" << sigma << "x+" << tau << ")";
  if (f.symbolic()) return ScalarFunction(f.symbolic()->substitute(sigma, tau), domain, os.str());
  return ScalarFunction([f, sigma, tau](double x) { return f.raw(sigma * x + tau); }, domain,
                        os.str());
}

}  // namespace fractel
