#include "fractel/text_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fractel_fixture_text.hpp"

namespace fractel {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_blank_or_comment(const std::string& line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

double parse_plain(std::string_view token) {
  double v = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(token) + "'");
  }
  return v;
}

std::vector<double> parse_reals(const std::vector<std::string>& tokens, std::size_t from) {
  std::vector<double> out;
  for (std::size_t i = from; i < tokens.size(); ++i) out.push_back(parse_real(tokens[i]));
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_plain(token);
  const double num = parse_plain(token.substr(0, slash));
  const double den = parse_plain(token.substr(slash + 1));
  if (den == 0.0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(token) + "'");
  return num / den;
}

PowerSum parse_power_sum(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error(ErrorKind::ParseError, "empty function descriptor");
  const std::string& kind = tokens.front();
  const auto params = parse_reals(tokens, 1);
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(ErrorKind::ParseError, "'" + kind + "' takes " + std::to_string(n) + " parameters");
    }
  };
  if (kind == "zero") {
    expect(0);
    return PowerSum::constant(0.0);
  }
  if (kind == "const") {
    expect(1);
    return PowerSum::constant(params[0]);
  }
  if (kind == "poly") {
    if (params.empty()) throw Error(ErrorKind::ParseError, "'poly' needs coefficients");
    return PowerSum::polynomial(params);
  }
  if (kind == "pow") {
    expect(2);
    return PowerSum::monomial(params[0], params[1]);
  }
  if (kind == "powsum") {
    if (params.empty() || params.size() % 4 != 0) {
      throw Error(ErrorKind::ParseError, "'powsum' takes groups of 4 parameters");
    }
    std::vector<PowerTerm> terms;
    for (std::size_t i = 0; i < params.size(); i += 4) {
      terms.push_back({params[i], params[i + 1], params[i + 2], params[i + 3]});
    }
    return PowerSum(std::move(terms));
  }
  throw Error(ErrorKind::ParseError, "unknown function kind '" + kind + "'");
}

std::vector<std::string> describe_power_sum(const PowerSum& p) {
  double c = 0.0;
  if (p.is_constant(&c)) {
    if (c == 0.0) return {"zero"};
    return {"const", format_double(c)};
  }
  std::vector<std::string> out{"powsum"};
  for (const auto& t : p.terms()) {
    for (double v : {t.coef, t.slope, t.offset, t.exponent}) out.push_back(format_double(v));
  }
  return out;
}

void write_local_ifs(std::ostream& os, const LocalIFS& ifs) {
  os << "# sigma tau s lambda_kind lambda_params... domain_lo domain_hi\n";
  os << "base " << format_double(ifs.base().lo()) << ' ' << format_double(ifs.base().hi()) << '\n';
  for (const auto& piece : ifs.pieces()) {
    const auto& sym = piece.lambda().symbolic();
    if (!sym) {
      throw Error(ErrorKind::NotSerializable,
                  "lambda '" + piece.lambda().label() + "' has no closed form");
    }
    os << format_double(piece.w.l().sigma()) << ' ' << format_double(piece.w.l().tau()) << ' '
       << format_double(piece.s());
    for (const auto& tok : describe_power_sum(*sym)) os << ' ' << tok;
    os << ' ' << format_double(piece.fractel_domain.lo()) << ' '
       << format_double(piece.fractel_domain.hi()) << '\n';
  }
}

LocalIFS read_local_ifs(std::istream& is) {
  std::string line;
  std::optional<Interval> base;
  std::vector<IfsPiece> pieces;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    try {
      const auto tok = split_ws(line);
      if (!base) {
        if (tok.size() != 3 || tok[0] != "base") {
          throw Error(ErrorKind::ParseError, "expected 'base lo hi'");
        }
        base.emplace(parse_real(tok[1]), parse_real(tok[2]));
        continue;
      }
      if (tok.size() < 6) throw Error(ErrorKind::ParseError, "piece line too short");
      const Interval dom(parse_real(tok[tok.size() - 2]), parse_real(tok.back()));
      const std::vector<std::string> desc(tok.begin() + 3, tok.end() - 2);
      const AffineMap1D l(parse_real(tok[0]), parse_real(tok[1]), dom);
      pieces.push_back(
          {Fractel::affine(l, parse_real(tok[2]), ScalarFunction(parse_power_sum(desc), dom)), dom});
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!base) throw Error(ErrorKind::ParseError, "missing 'base' line");
  return LocalIFS(*base, std::move(pieces));
}

std::vector<FractelFixture> parse_fixture_table(std::istream& is) {
  std::vector<FractelFixture> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    try {
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, '|')) fields.push_back(field);
      if (fields.size() != 4) throw Error(ErrorKind::ParseError, "expected 4 '|'-separated fields");
      const auto head = split_ws(fields[0]);
      const auto range = split_ws(fields[3]);
      if (head.size() != 4 || range.size() != 2) {
        throw Error(ErrorKind::ParseError, "expected 'name sigma tau s' and 'lo hi'");
      }
      const Interval dom(parse_real(range[0]), parse_real(range[1]));
      const AffineMap1D l(parse_real(head[1]), parse_real(head[2]), dom);
      ScalarFunction lambda(parse_power_sum(split_ws(fields[1])), dom, trim(fields[1]));
      ScalarFunction f(parse_power_sum(split_ws(fields[2])), dom, trim(fields[2]));
      out.push_back({head[0], Fractel::affine(l, parse_real(head[3]), std::move(lambda)),
                     std::move(f)});
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string_view builtin_fixture_text() { return kFixtureText; }

const std::vector<FractelFixture>& builtin_fixtures() {
  static const std::vector<FractelFixture> table = [] {
    std::istringstream is{std::string(kFixtureText)};
    return parse_fixture_table(is);
  }();
  return table;
}

std::vector<FractelFixture> find_fixtures(const std::vector<FractelFixture>& table,
                                          const std::string& name) {
  std::vector<FractelFixture> out;
  for (const auto& f : table) {
    if (f.name == name) return {f};
  }
  const std::string prefix = name + "_";
  for (const auto& f : table) {
    if (f.name.rfind(prefix, 0) == 0) out.push_back(f);
  }
  if (out.empty()) throw Error(ErrorKind::UnknownFixture, "no fixture named '" + name + "'");
  return out;
}

void write_relative_error_csv(std::ostream& os, const RelativeErrorProfile& profile) {
  os << "x,e(x)\n";
  for (const auto& row : profile.rows) os << format_double(row.x) << ',' << format_double(row.e) << '\n';
}

RelativeErrorProfile read_relative_error_csv(std::istream& is) {
  RelativeErrorProfile profile;
  std::string line;
  if (!std::getline(is, line) || trim(line) != "x,e(x)") {
    throw Error(ErrorKind::ParseError, "missing 'x,e(x)' header");
  }
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "expected 'x,e'");
    const double x = parse_plain(trim(std::string_view(line).substr(0, comma)));
    const double e = parse_plain(trim(std::string_view(line).substr(comma + 1)));
    profile.rows.push_back({x, e});
    profile.max_abs = std::max(profile.max_abs, std::abs(e));
  }
  return profile;
}

}  // namespace fractel
