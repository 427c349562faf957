#include "fractel_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fractel/digit_eval.hpp"
#include "fractel/error.hpp"
#include "fractel/local_ifs.hpp"
#include "fractel/poly_fractel.hpp"
#include "fractel/sampling.hpp"
#include "fractel/text_io.hpp"
#include "fractel_cli/bench.hpp"

namespace fractel::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out_path;
  std::uint64_t seed = 1;

  std::string fixture;
  std::size_t grid = 1000;
  double tol = 1e-10;
  std::size_t count = 200;
  unsigned degree = 4;

  std::string target;
  std::string rule = "midpoint";
  double sigma = 0.5;
  std::size_t iterations = 60;
  std::size_t points = 1000;
  double x_min = 1e-6;

  std::string basis;
  std::string sigma_text;
  std::string tau_text;

  std::string coeffs;
  std::string x_text;
  unsigned base = 10;
  std::string mode = "exact";
  unsigned digits = 20;

  std::string poly_file;
  std::size_t repetitions = 10000;
};

/// Primary output: the --out file when given, else the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& get() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

int cmd_verify_random(const Options& o, std::ostream& out) {
  PolynomialSampler sampler(o.seed);
  std::map<std::string, std::pair<double, std::size_t>> worst;  // op -> (max residual, failures)
  std::vector<std::string> order;
  for (std::size_t t = 0; t < o.count; ++t) {
    for (const auto& r : closure_trial(sampler, o.degree, o.tol, o.grid)) {
      auto [it, fresh] = worst.try_emplace(r.operation, 0.0, 0);
      if (fresh) order.push_back(r.operation);
      it->second.first = std::max(it->second.first, r.max_residual);
      if (!r.pass) ++it->second.second;
    }
  }
  bool all = true;
  for (const auto& op : order) {
    const auto& [res, fails] = worst[op];
    all = all && fails == 0;
    out << "closure_" << op << " trials=" << o.count << " seed=" << o.seed
        << " max_residual=" << format_double(res) << " failures=" << fails << ' '
        << verdict(fails == 0) << '\n';
  }
  return all ? kOk : kFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.fixture == "random") return cmd_verify_random(o, out);
  std::vector<FractelFixture> selected;
  if (std::filesystem::is_regular_file(o.fixture)) {
    std::ifstream in(o.fixture);
    if (!in) throw IoError("cannot read '" + o.fixture + "'");
    selected = parse_fixture_table(in);
  } else {
    selected = find_fixtures(builtin_fixtures(), o.fixture);
  }
  bool all = true;
  for (const auto& fx : selected) {
    const auto rep = verify_fractel(fx.w, fx.f, o.grid, o.tol);
    all = all && rep.pass;
    out << fx.name << " max_residual=" << format_double(rep.max_residual)
        << " worst_x=" << format_double(rep.worst_x) << ' ' << verdict(rep.pass) << '\n';
  }
  return all ? kOk : kFail;
}

SqrtMode parse_rule(const std::string& rule) {
  if (rule == "exact") return SqrtMode::Exact;
  if (rule == "midpoint") return SqrtMode::Midpoint;
  if (rule == "mean") return SqrtMode::Mean;
  if (rule == "trapezoid") return SqrtMode::Trapezoid;
  throw Error(ErrorKind::InvalidArgument, "unknown rule '" + rule + "'");
}

int cmd_approx(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.target != "sqrt") throw Error(ErrorKind::InvalidArgument, "unknown target '" + o.target + "'");
  const SqrtMode mode = parse_rule(o.rule);
  const LocalIFS exact = build_sqrt_ifs(o.sigma, o.sigma, SqrtMode::Exact);
  const LocalIFS ifs = build_sqrt_ifs(o.sigma, o.sigma, mode);
  const ScalarFunction root([](double x) { return std::sqrt(x); }, Interval(0.0, 1.0), "sqrt");

  // Grid iteration from g = 0 for the sup-change history.
  const std::size_t n = (std::size_t{1} << 12) + 1;
  const auto xs = Interval(0.0, 1.0).grid(n);
  const auto fp = rb_fixed_point(ifs, PiecewiseSample{xs, std::vector<double>(n, 0.0)},
                                 o.iterations);

  // Pointwise Phi^k(0) on a log grid, k = iterations.
  const auto profile = relative_error_profile(ifs, root, o.points, o.x_min, o.iterations);
  double sup_error = 0.0;
  for (double x : Interval(0.0, 1.0).grid(10001)) {
    sup_error = std::max(sup_error, std::abs(evaluate_fixed_point(ifs, x, o.iterations) - std::sqrt(x)));
  }
  const double bound = error_bound(lambda_deviations(exact, ifs), ifs.max_contraction());

  Sink sink(o.out_path, out);
  write_relative_error_csv(sink.get(), profile);
  sink.finish();

  err << "# rule=" << o.rule << " sigma=" << format_double(o.sigma)
      << " iterations=" << fp.iterations << " max_abs_e=" << format_double(profile.max_abs)
      << " sup_error=" << format_double(sup_error) << " bound=" << format_double(bound)
      << " bound_holds=" << (sup_error <= bound + 1e-15 ? "yes" : "no")
      << " contraction_ratio=" << format_double(fp.contraction_ratio)
      << " last_sup_change=" << format_double(fp.sup_changes.empty() ? 0.0 : fp.sup_changes.back())
      << '\n';
  return kOk;
}

int cmd_polybasis(const Options& o, std::ostream& out) {
  const NamedBasis basis = parse_named_basis(o.basis);
  const Rational sigma = Rational::parse(o.sigma_text);
  const Rational tau = Rational::parse(o.tau_text);
  semigroup_member(sigma, tau, FunctionSpace::PolyK);  // rejects l([0,1]) outside [0,1]
  const auto bf = basis_fractel(basis_matrix(basis), sigma, tau);
  out << bf.M;
  out << "# basis=" << to_string(basis) << " sigma=" << sigma << " tau=" << tau
      << " column_stochastic=" << (stochastic_check(bf.M) ? "yes" : "no") << '\n';
  return kOk;
}

RationalVector parse_coeff_list(const std::string& text) {
  RationalVector coeffs;
  std::istringstream cs(text);
  std::string tok;
  while (std::getline(cs, tok, ',')) coeffs.push_back(Rational::parse(tok));
  if (coeffs.empty()) throw Error(ErrorKind::BadRational, "empty coefficient list");
  return coeffs;
}

int cmd_polyeval(const Options& o, std::ostream& out) {
  const RationalVector coeffs = parse_coeff_list(o.coeffs);
  const DigitNumber x = DigitNumber::parse(o.x_text, o.base);
  if (o.mode == "exact") {
    const auto st = eval_digits_exact(coeffs, x);
    out << "value " << st.value() << '\n';
    out << "decimal " << st.value().decimal(o.digits) << '\n';
    out << "state";
    for (const auto& v : st.vector) out << ' ' << v;
    out << '\n';
  } else if (o.mode == "float") {
    std::vector<double> c64;
    for (const auto& c : coeffs) c64.push_back(c.to_double());
    const auto st = eval_digits_f64(c64, x);
    out << "value " << format_double(st.value()) << '\n';
    out << "state";
    for (double v : st.vector) out << ' ' << format_double(v);
    out << '\n';
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown mode '" + o.mode + "'");
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.poly_file);
  if (!in) throw IoError("cannot read '" + o.poly_file + "'");
  const auto cases = parse_poly_file(in);
  const auto rows = run_bench(cases, o.repetitions);
  Sink sink(o.out_path, out);
  write_bench_csv(sink.get(), rows);
  sink.finish();

  std::map<std::string, std::vector<double>> per_method;
  for (const auto& r : rows) per_method[r.method].push_back(r.ns_per_eval);
  for (auto& [method, ns] : per_method) {
    std::sort(ns.begin(), ns.end());
    const std::size_t n = ns.size();
    const double med = n % 2 ? ns[n / 2] : 0.5 * (ns[n / 2 - 1] + ns[n / 2]);
    err << "# " << method << " median_ns_per_eval=" << format_double(med) << '\n';
  }
  return kOk;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::BadDigit:
    case ErrorKind::BadRational:
    case ErrorKind::ParseError:
    case ErrorKind::UnknownFixture:
    case ErrorKind::NotInSemigroup:
    case ErrorKind::NotSerializable:
      return kUsage;
    default:
      return kFail;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fractel toolkit: verification, approximation and digit evaluation", "fractel"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write primary output to this file");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto* verify = app.add_subcommand("verify", "Check F(x, f(x)) = f(l(x)) for fixtures");
  verify->add_option("fixture", o.fixture, "Built-in fixture name, fixture file, or 'random'")
      ->required();
  verify->add_option("--grid", o.grid, "Grid points")->check(CLI::Range(2, 100000000));
  verify->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--count", o.count, "Trials for 'random'");
  verify->add_option("--degree", o.degree, "Maximum degree for 'random'");

  auto* approx = app.add_subcommand("approx", "Relative error of a fractel approximation");
  approx->add_option("target", o.target, "Target function (sqrt)")->required();
  approx->add_option("--rule", o.rule, "exact|midpoint|mean|trapezoid")
      ->check(CLI::IsMember({"exact", "midpoint", "mean", "trapezoid"}));
  approx->add_option("--sigma", o.sigma, "Vertical scaling of pieces 2 and 3")
      ->check(CLI::Range(0.0, 0.5));
  approx->add_option("--iterations", o.iterations, "RB iterations from g = 0")
      ->check(CLI::Range(1, 100000));
  approx->add_option("--points", o.points, "Log-spaced CSV rows")->check(CLI::Range(2, 10000000));
  approx->add_option("--x-min", o.x_min, "Smallest x of the CSV")->check(CLI::PositiveNumber);

  auto* polybasis = app.add_subcommand("polybasis", "Exact basis matrix M = T M_l T^-1");
  polybasis->add_option("basis", o.basis, "monomial|hat|chebyshev3|bspline3")->required();
  polybasis->add_option("sigma", o.sigma_text, "Rational slope")->required();
  polybasis->add_option("tau", o.tau_text, "Rational offset")->required();

  auto* polyeval = app.add_subcommand("polyeval", "Digit-by-digit polynomial evaluation");
  polyeval->add_option("coeffs", o.coeffs, "Comma-separated rationals a0,a1,...")->required();
  polyeval->add_option("x", o.x_text, "Digit string, e.g. 1.23")->required();
  polyeval->add_option("--base", o.base, "Digit base")->check(CLI::Range(2, 36));
  polyeval->add_option("--mode", o.mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  polyeval->add_option("--digits", o.digits, "Decimal digits for exact mode");

  auto* bench = app.add_subcommand("bench", "Horner vs digit-IFS timing and accuracy");
  bench->add_option("poly_file", o.poly_file, "Polynomial file")->required();
  bench->add_option("--repetitions", o.repetitions, "Evaluations per method")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*approx) return cmd_approx(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
    Sink sink(o.out_path, out);
    int code = kOk;
    if (*verify) code = cmd_verify(o, sink.get());
    if (*polybasis) code = cmd_polybasis(o, sink.get());
    if (*polyeval) code = cmd_polyeval(o, sink.get());
    sink.finish();
    return code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  }
}

}  // namespace fractel::cli
