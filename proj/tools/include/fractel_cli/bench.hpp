#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fractel/digit_eval.hpp"

namespace fractel::cli {

struct PolyCase {
  std::size_t id;       // 1-based among non-comment lines
  std::size_t line;     // 1-based source line
  RationalVector coeffs;
  std::string x_text;
  DigitNumber x;
};

/// One polynomial per line: `a0,a1,...,an x` with rational coefficients and
/// a base-10 digit string. Blank lines and `#` comments are skipped. Throws
/// ParseError naming the line.
std::vector<PolyCase> parse_poly_file(std::istream& is);

struct BenchRow {
  std::size_t poly_id;
  std::string x;
  std::string method;
  double value;
  double rel_err;
  double ns_per_eval;
};

/// Times Horner and digit-IFS evaluation in f64 and f32. Each method runs
/// `batches` batches of `repetitions / batches` evaluations; ns_per_eval is
/// the median over batches.
std::vector<BenchRow> run_bench(const std::vector<PolyCase>& cases, std::size_t repetitions,
                                std::size_t batches = 5);

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace fractel::cli
