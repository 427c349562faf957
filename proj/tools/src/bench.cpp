#include "fractel_cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include "fractel/error.hpp"
#include "fractel/text_io.hpp"

namespace fractel::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename Fn>
double median_ns(std::size_t repetitions, std::size_t batches, Fn&& fn) {
  const std::size_t per = std::max<std::size_t>(1, repetitions / std::max<std::size_t>(1, batches));
  std::vector<double> samples;
  for (std::size_t b = 0; b < std::max<std::size_t>(1, batches); ++b) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < per; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                      static_cast<double>(per));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

}  // namespace

std::vector<PolyCase> parse_poly_file(std::istream& is) {
  std::vector<PolyCase> cases;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream ss(text);
    std::string coeff_text, x_text, extra;
    if (!(ss >> coeff_text >> x_text)) line_error(line, "expected `coefficients x`");
    if (ss >> extra) line_error(line, "unexpected token '" + extra + "'");
    RationalVector coeffs;
    std::istringstream cs(coeff_text);
    std::string tok;
    while (std::getline(cs, tok, ',')) {
      try {
        coeffs.push_back(Rational::parse(tok));
      } catch (const Error& e) {
        line_error(line, e.what());
      }
    }
    if (coeffs.empty()) line_error(line, "no coefficients");
    try {
      cases.push_back({cases.size() + 1, line, std::move(coeffs), x_text,
                       DigitNumber::parse(x_text, 10)});
    } catch (const Error& e) {
      line_error(line, e.what());
    }
  }
  return cases;
}

std::vector<BenchRow> run_bench(const std::vector<PolyCase>& cases, std::size_t repetitions,
                                std::size_t batches) {
  std::vector<BenchRow> rows;
  volatile double sink = 0.0;
  for (const auto& c : cases) {
    const auto cmp64 = horner_compare(c.coeffs, c.x, FloatPrecision::F64);
    const auto cmp32 = horner_compare(c.coeffs, c.x, FloatPrecision::F32);

    std::vector<double> c64;
    for (const auto& a : c.coeffs) c64.push_back(a.to_double());
    std::vector<float> c32(c64.begin(), c64.end());
    const double x64 = c.x.value().to_double();
    const float x32 = static_cast<float>(x64);
    j_table(10, static_cast<unsigned>(c64.size() - 1));  // warm the cache outside the timing

    const double h64 = median_ns(repetitions, batches, [&] { sink = sink + horner(c64, x64); });
    const double i64 =
        median_ns(repetitions, batches, [&] { sink = sink + eval_digits_f64(c64, c.x).value(); });
    const double h32 = median_ns(repetitions, batches, [&] { sink = sink + horner(c32, x32); });
    const double i32 =
        median_ns(repetitions, batches, [&] { sink = sink + eval_digits_f32(c32, c.x).value(); });

    rows.push_back({c.id, c.x_text, "horner_f64", cmp64.horner_value, cmp64.horner_err, h64});
    rows.push_back({c.id, c.x_text, "digit_ifs_f64", cmp64.digit_ifs_value, cmp64.ifs_err, i64});
    rows.push_back({c.id, c.x_text, "horner_f32", cmp32.horner_value, cmp32.horner_err, h32});
    rows.push_back({c.id, c.x_text, "digit_ifs_f32", cmp32.digit_ifs_value, cmp32.ifs_err, i32});
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "poly_id,x,method,value,rel_err,ns_per_eval\n";
  for (const auto& r : rows) {
    os << r.poly_id << ',' << r.x << ',' << r.method << ',' << format_double(r.value) << ','
       << format_double(r.rel_err) << ',' << format_double(r.ns_per_eval) << '\n';
  }
}

}  // namespace fractel::cli
