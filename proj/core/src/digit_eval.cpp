#include "fractel/digit_eval.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "fractel/error.hpp"
#include "fractel/poly_fractel.hpp"

namespace fractel {

namespace {

void require_digit(unsigned base, unsigned digit) {
  if (base < 2) throw Error(ErrorKind::BadDigit, "base must be at least 2");
  if (digit >= base) {
    throw Error(ErrorKind::BadDigit,
                "digit " + std::to_string(digit) + " invalid in base " + std::to_string(base));
  }
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char digit_char(unsigned d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

template <typename Scalar>
std::vector<Scalar> mat_vec(const std::vector<Scalar>& m, const std::vector<Scalar>& v) {
  const std::size_t n = v.size();
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t r = 0; r < n; ++r) {
    Scalar acc = 0;
    // J is upper triangular.
    for (std::size_t c = r; c < n; ++c) acc += m[r * n + c] * v[c];
    out[r] = acc;
  }
  return out;
}

unsigned degree_of(std::size_t coeff_count) {
  if (coeff_count == 0) throw Error(ErrorKind::InvalidArgument, "polynomial needs a coefficient");
  return static_cast<unsigned>(coeff_count - 1);
}

}  // namespace

DigitNumber::DigitNumber(unsigned base, unsigned int_digit, std::vector<unsigned> frac_digits)
    : base_(base), int_digit_(int_digit), frac_(std::move(frac_digits)) {
  require_digit(base_, int_digit_);
  for (unsigned d : frac_) require_digit(base_, d);
}

DigitNumber DigitNumber::parse(std::string_view text, unsigned base) {
  if (base < 2 || base > 36) throw Error(ErrorKind::BadDigit, "base must lie in [2, 36]");
  const auto dot = text.find('.');
  const std::string_view head = text.substr(0, dot);
  const std::string_view tail = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (head.size() != 1) {
    throw Error(ErrorKind::BadDigit,
                "'" + std::string(text) + "' must have exactly one digit before the point");
  }
  auto read = [&](char c) {
    const int v = digit_value(c);
    if (v < 0 || static_cast<unsigned>(v) >= base) {
      throw Error(ErrorKind::BadDigit, "'" + std::string(1, c) + "' is not a base-" +
                                           std::to_string(base) + " digit in '" + std::string(text) + "'");
    }
    return static_cast<unsigned>(v);
  };
  std::vector<unsigned> frac;
  for (char c : tail) frac.push_back(read(c));
  return DigitNumber(base, read(head.front()), std::move(frac));
}

std::vector<unsigned> DigitNumber::digits() const {
  std::vector<unsigned> out{int_digit_};
  out.insert(out.end(), frac_.begin(), frac_.end());
  return out;
}

Rational DigitNumber::value() const {
  Rational v = int_digit_;
  Rational scale = 1;
  const Rational inv_base(1, static_cast<long>(base_));
  for (unsigned d : frac_) {
    scale *= inv_base;
    v += scale * Rational(d);
  }
  return v;
}

std::string DigitNumber::str() const {
  std::string s(1, digit_char(int_digit_));
  if (!frac_.empty()) {
    s += '.';
    for (unsigned d : frac_) s += digit_char(d);
  }
  return s;
}

JMatrix make_j_matrix(unsigned base, unsigned degree, unsigned digit) {
  require_digit(base, digit);
  const Rational s(1, static_cast<long>(base));
  const Rational t = Rational(static_cast<long>(digit) * static_cast<long>(base)) /
                     Rational(static_cast<long>(base) - 1);
  const RationalMatrix Mt = binomial_matrix(1, t, degree);
  RationalVector diag(degree + 1);
  for (unsigned i = 0; i <= degree; ++i) diag[i] = pow(s, i);
  const RationalMatrix J = (Mt * RationalMatrix::diagonal(diag) * Mt.inverse()).transpose();
  return {degree, base, digit, J};
}

JTable::JTable(unsigned base, unsigned degree) : base_(base), degree_(degree) {
  require_digit(base, 0);
  const std::size_t n = degree + 1;
  for (unsigned d = 0; d < base; ++d) {
    exact_.push_back(make_j_matrix(base, degree, d));
    std::vector<double> m64(n * n);
    std::vector<float> m32(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m64[r * n + c] = exact_.back().entries(r, c).to_double();
        m32[r * n + c] = static_cast<float>(m64[r * n + c]);
      }
    }
    f64_.push_back(std::move(m64));
    f32_.push_back(std::move(m32));
  }
}

const JMatrix& JTable::exact(unsigned digit) const {
  require_digit(base_, digit);
  return exact_[digit];
}

std::shared_ptr<const JTable> j_table(unsigned base, unsigned degree) {
  static std::shared_mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const JTable>> cache;
  const auto key = std::make_pair(base, degree);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const JTable>(base, degree);
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

ExactState start_exact(const RationalVector& coeffs, unsigned base) {
  degree_of(coeffs.size());
  require_digit(base, 0);
  return {base, coeffs, 0};
}

ExactState extend_precision(const ExactState& state, unsigned next_digit) {
  const auto table = j_table(state.base, degree_of(state.vector.size()));
  return {state.base, table->exact(next_digit).entries * state.vector, state.digits_consumed + 1};
}

EvalState<double> extend_precision(const EvalState<double>& state, unsigned next_digit) {
  const auto table = j_table(state.base, degree_of(state.vector.size()));
  require_digit(state.base, next_digit);
  return {state.base, mat_vec(table->f64(next_digit), state.vector), state.digits_consumed + 1};
}

EvalState<float> extend_precision(const EvalState<float>& state, unsigned next_digit) {
  const auto table = j_table(state.base, degree_of(state.vector.size()));
  require_digit(state.base, next_digit);
  return {state.base, mat_vec(table->f32(next_digit), state.vector), state.digits_consumed + 1};
}

namespace {

template <typename State>
State run_digits(State state, const DigitNumber& x) {
  for (unsigned d : x.digits()) state = extend_precision(state, d);
  return state;
}

}  // namespace

ExactState eval_digits_exact(const RationalVector& coeffs, const DigitNumber& x) {
  return run_digits(start_exact(coeffs, x.base()), x);
}

namespace {

// One table lookup for the whole digit string; two buffers swapped per digit.
template <typename Scalar, typename Pick>
EvalState<Scalar> run_digits_float(const std::vector<Scalar>& coeffs, const DigitNumber& x,
                                   Pick pick) {
  const auto table = j_table(x.base(), degree_of(coeffs.size()));
  const std::size_t n = coeffs.size();
  std::vector<Scalar> cur = coeffs;
  std::vector<Scalar> next(n);
  const auto digits = x.digits();
  for (unsigned d : digits) {
    require_digit(x.base(), d);
    const std::vector<Scalar>& m = pick(*table, d);
    for (std::size_t r = 0; r < n; ++r) {
      Scalar acc = 0;
      for (std::size_t c = r; c < n; ++c) acc += m[r * n + c] * cur[c];
      next[r] = acc;
    }
    cur.swap(next);
  }
  return {x.base(), std::move(cur), digits.size()};
}

}  // namespace

EvalState<double> eval_digits_f64(const std::vector<double>& coeffs, const DigitNumber& x) {
  return run_digits_float(coeffs, x, [](const JTable& t, unsigned d) -> const std::vector<double>& {
    return t.f64(d);
  });
}

EvalState<float> eval_digits_f32(const std::vector<float>& coeffs, const DigitNumber& x) {
  return run_digits_float(coeffs, x, [](const JTable& t, unsigned d) -> const std::vector<float>& {
    return t.f32(d);
  });
}

double relative_error(double approx, const Rational& exact) {
  const Rational diff = abs(Rational::from_double(approx) - exact);
  if (exact.is_zero()) return diff.to_double();
  return (diff / abs(exact)).to_double();
}

HornerComparison horner_compare(const std::vector<double>& coeffs, const DigitNumber& x,
                                FloatPrecision precision) {
  RationalVector exact_coeffs;
  for (double c : coeffs) exact_coeffs.push_back(Rational::from_double(c));
  return horner_compare(exact_coeffs, x, precision);
}

HornerComparison horner_compare(const RationalVector& coeffs, const DigitNumber& x,
                                FloatPrecision precision) {
  const Rational xv = x.value();
  HornerComparison out;
  out.exact_value = evaluate(coeffs, xv);
  if (precision == FloatPrecision::F64) {
    std::vector<double> c64;
    for (const auto& c : coeffs) c64.push_back(c.to_double());
    out.horner_value = horner(c64, xv.to_double());
    out.digit_ifs_value = eval_digits_f64(c64, x).value();
  } else {
    std::vector<float> c32;
    for (const auto& c : coeffs) c32.push_back(static_cast<float>(c.to_double()));
    out.horner_value = horner(c32, static_cast<float>(xv.to_double()));
    out.digit_ifs_value = eval_digits_f32(c32, x).value();
  }
  out.horner_err = relative_error(out.horner_value, out.exact_value);
  out.ifs_err = relative_error(out.digit_ifs_value, out.exact_value);
  return out;
}

}  // namespace fractel
