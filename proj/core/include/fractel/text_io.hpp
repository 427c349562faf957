#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fractel/local_ifs.hpp"

namespace fractel {

/// Shortest text that round-trips a double (17 significant digits).
std::string format_double(double v);

/// Parses "3", "-0.25", "1/8" or "1e-3" into the nearest double.
double parse_real(std::string_view token);

// Function descriptors, a kind keyword followed by parameters:
//   zero
//   const c
//   poly a0 a1 ... an             a0 + a1 x + ... + an x^n
//   pow a p                       a x^p
//   powsum c a b e [c a b e ...]  sum of c (a x + b)^e
PowerSum parse_power_sum(const std::vector<std::string>& tokens);
std::vector<std::string> describe_power_sum(const PowerSum& p);

/// One piece per line: `sigma tau s lambda_kind lambda_params... domain_lo domain_hi`,
/// preceded by a `base lo hi` line. `#` starts a comment line.
void write_local_ifs(std::ostream& os, const LocalIFS& ifs);
LocalIFS read_local_ifs(std::istream& is);

/// A fractel/function pair from the fixture table.
struct FractelFixture {
  std::string name;
  Fractel w;
  ScalarFunction f;
};

/// Fixture table rows: `name sigma tau s | lambda-descriptor | f-descriptor | lo hi`.
std::vector<FractelFixture> parse_fixture_table(std::istream& is);

/// The built-in table of worked examples.
const std::vector<FractelFixture>& builtin_fixtures();
std::string_view builtin_fixture_text();

/// Exact name match, else every fixture named `<name>_*`. Throws UnknownFixture.
std::vector<FractelFixture> find_fixtures(const std::vector<FractelFixture>& table,
                                          const std::string& name);

/// `x,e(x)` CSV with a header row and LF line endings.
void write_relative_error_csv(std::ostream& os, const RelativeErrorProfile& profile);
RelativeErrorProfile read_relative_error_csv(std::istream& is);

}  // namespace fractel
