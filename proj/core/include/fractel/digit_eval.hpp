#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fractel/rational_matrix.hpp"

namespace fractel {

/// d1.d2d3...dk in base B, value in [0, B).
class DigitNumber {
 public:
  DigitNumber(unsigned base, unsigned int_digit, std::vector<unsigned> frac_digits);

  /// "1.23", "7", "a.f" (base 16). Throws BadDigit.
  static DigitNumber parse(std::string_view text, unsigned base = 10);

  unsigned base() const noexcept { return base_; }
  unsigned int_digit() const noexcept { return int_digit_; }
  const std::vector<unsigned>& frac_digits() const noexcept { return frac_; }
  /// d1, d2, ..., dk
  std::vector<unsigned> digits() const;

  Rational value() const;
  std::string str() const;

 private:
  unsigned base_;
  unsigned int_digit_;
  std::vector<unsigned> frac_;
};

/// J(n) = (M_t D_s M_t^-1)^T with s = 1/B and t = nB/(B - 1); M_t is the
/// binomial matrix of x -> x + t and D_s = diag(1, s, ..., s^m).
struct JMatrix {
  unsigned degree;
  unsigned base;
  unsigned digit;
  RationalMatrix entries;
};

/// Throws BadDigit unless 0 <= digit < base and base >= 2.
JMatrix make_j_matrix(unsigned base, unsigned degree, unsigned digit);

/// All B digit matrices of one (base, degree), exact and as double/float.
class JTable {
 public:
  JTable(unsigned base, unsigned degree);

  unsigned base() const noexcept { return base_; }
  unsigned degree() const noexcept { return degree_; }
  const JMatrix& exact(unsigned digit) const;
  const std::vector<double>& f64(unsigned digit) const { return f64_.at(digit); }  // row-major
  const std::vector<float>& f32(unsigned digit) const { return f32_.at(digit); }

 private:
  unsigned base_;
  unsigned degree_;
  std::vector<JMatrix> exact_;
  std::vector<std::vector<double>> f64_;
  std::vector<std::vector<float>> f32_;
};

/// Shared immutable table per (base, degree); safe to call from several threads.
std::shared_ptr<const JTable> j_table(unsigned base, unsigned degree);

/// After digits d1..dk the vector is J(dk) ... J(d1) (a0, ..., am)^T; its first
/// component is p(d1.d2...dk).
template <typename Scalar>
struct EvalState {
  unsigned base = 10;
  std::vector<Scalar> vector;
  std::size_t digits_consumed = 0;

  const Scalar& value() const { return vector.front(); }
};

using ExactState = EvalState<Rational>;

/// State before any digit: the coefficient vector itself.
ExactState start_exact(const RationalVector& coeffs, unsigned base);
template <typename Scalar>
EvalState<Scalar> start_float(const std::vector<Scalar>& coeffs, unsigned base) {
  return {base, coeffs, 0};
}

/// One matrix-vector product: the state for one more digit.
ExactState extend_precision(const ExactState& state, unsigned next_digit);
EvalState<double> extend_precision(const EvalState<double>& state, unsigned next_digit);
EvalState<float> extend_precision(const EvalState<float>& state, unsigned next_digit);

ExactState eval_digits_exact(const RationalVector& coeffs, const DigitNumber& x);
EvalState<double> eval_digits_f64(const std::vector<double>& coeffs, const DigitNumber& x);
EvalState<float> eval_digits_f32(const std::vector<float>& coeffs, const DigitNumber& x);

/// Plain Horner in the given precision.
template <typename Scalar>
Scalar horner(const std::vector<Scalar>& coeffs, Scalar x) {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

enum class FloatPrecision { F32, F64 };

struct HornerComparison {
  double horner_value = 0.0;
  double digit_ifs_value = 0.0;
  Rational exact_value;
  double horner_err = 0.0;  // relative (absolute when the exact value is 0)
  double ifs_err = 0.0;
};

/// Evaluates p at x both ways in reduced precision against the exact value of
/// p (coefficients taken exactly from the doubles) at the exact digit number.
HornerComparison horner_compare(const std::vector<double>& coeffs, const DigitNumber& x,
                                FloatPrecision precision);
/// Same, with the exact value taken from rational coefficients; the float
/// paths see the coefficients rounded to the working precision.
HornerComparison horner_compare(const RationalVector& coeffs, const DigitNumber& x,
                                FloatPrecision precision);

/// |approx - exact| / |exact|, computed exactly then rounded.
double relative_error(double approx, const Rational& exact);

}  // namespace fractel
