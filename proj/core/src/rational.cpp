#include "fractel/rational.hpp"

#include <cmath>
#include <ostream>

#include "fractel/error.hpp"

namespace fractel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::BadRational, "'" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::BadRational, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorKind::BadRational, "non-finite double");
  return Rational(mpq_class(d));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorKind::BadRational, "empty rational");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(s.substr(0, slash), text);
    const mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::BadRational, "zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw Error(ErrorKind::BadRational, "'" + std::string(text) + "'");
    }
    mpz_class digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(digits, scale);
    if (negative) q = -q;
    return Rational(q);
  }
  return Rational(mpq_class(parse_integer(s, text)));
}

std::string Rational::decimal(unsigned digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // Round half away from zero at the requested place.
  const mpq_class scaled = abs(v_) * scale;
  mpz_class q = scaled.get_num() * 2 + scaled.get_den();
  mpz_class den2 = scaled.get_den() * 2;
  mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), den2.get_mpz_t());
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sgn(v_) < 0 && q != 0 ? "-" : "") + body;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::BadRational, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.value()))); }

Rational pow(const Rational& r, unsigned n) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), r.value().get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), r.value().get_den_mpz_t(), n);
  return Rational(mpq_class(num, den));
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(mpq_class(c));
}

}  // namespace fractel
