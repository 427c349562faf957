#include "fractel/sampling.hpp"

#include "fractel/local_ifs.hpp"

namespace fractel {

Rational PolynomialSampler::rational() {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  const long n = num(rng_);
  return Rational(n, den(rng_));
}

Rational PolynomialSampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

RationalPoly PolynomialSampler::polynomial(unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  RationalPoly p(deg(rng_) + 1);
  for (auto& a : p) a = rational();
  p.back() = nonzero_rational();
  return p;
}

RationalPoly PolynomialSampler::lifted(const RationalPoly& p) {
  RationalPoly out = p;
  Rational shift = 1;
  for (const auto& a : p) shift += abs(a);
  out.front() += shift;
  return out;
}

double PolynomialSampler::tau() {
  std::uniform_int_distribution<int> pick(0, 2);
  return 0.5 * pick(rng_);
}

double PolynomialSampler::theta() {
  std::uniform_real_distribution<double> t(0.5, 4.0);
  return t(rng_);
}

ScalarFunction polynomial_function(const RationalPoly& p, const Interval& domain) {
  std::vector<double> coeffs;
  std::string label = "poly(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    coeffs.push_back(p[i].to_double());
    label += (i ? "," : "") + p[i].str();
  }
  return ScalarFunction(PowerSum::polynomial(coeffs), domain, label + ")");
}

FractelWithWitness polynomial_fractel(const RationalPoly& p, double tau, double theta) {
  const Interval unit(0.0, 1.0);
  const ScalarFunction f = polynomial_function(p, unit);
  return {build_fractel_for_power_plus_g(0.0, tau, theta, f, unit), f};
}

std::vector<ClosureOutcome> closure_trial(PolynomialSampler& sampler, unsigned max_degree,
                                          double tol, std::size_t grid) {
  std::vector<ClosureOutcome> out;
  auto record = [&](const char* op, const FractelWithWitness& r) {
    const auto rep = verify_fractel(r.w(), r.f(), grid, tol);
    out.push_back({op, rep.max_residual, rep.pass});
  };
  auto check = [&](const char* op, const Fractel& w, const ScalarFunction& f) {
    const auto rep = verify_fractel(w, f, grid, tol);
    out.push_back({op, rep.max_residual, rep.pass});
  };

  const double tau = sampler.tau();
  const auto p = sampler.polynomial(max_degree);
  const auto q = sampler.polynomial(max_degree);
  const auto a = polynomial_fractel(p, tau, sampler.theta());
  const auto b = polynomial_fractel(q, tau, sampler.theta());

  record("sum", sum_fractel(a, b));
  record("scale", scale_fractel(a, sampler.nonzero_rational().to_double()));

  const auto pa = polynomial_fractel(PolynomialSampler::lifted(p), tau, sampler.theta());
  const auto pb = polynomial_fractel(PolynomialSampler::lifted(q), tau, sampler.theta());
  record("product", product_fractel(pa, pb, grid));

  const auto other = polynomial_fractel(p, sampler.tau(), sampler.theta());
  check("compose", compose_fractels(a.w(), other.w()), a.f());
  return out;
}

}  // namespace fractel
