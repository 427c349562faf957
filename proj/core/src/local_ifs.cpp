#include "fractel/local_ifs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fractel {

namespace {

constexpr double kStopChange = 1e-12;
constexpr double kRatioFloor = 1e-10;
constexpr double kConflictTol = 1e-9;

CoverDiagnostic diagnose_cover(const Interval& base, const std::vector<IfsPiece>& pieces) {
  std::vector<Interval> images;
  images.reserve(pieces.size());
  for (const auto& p : pieces) images.push_back(p.image());
  std::sort(images.begin(), images.end(),
            [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
  CoverDiagnostic diag;
  double reach = base.lo();
  bool gap = false;
  for (const auto& img : images) {
    if (img.lo() > reach + kEndpointTol) gap = true;
    if (img.lo() < reach - kEndpointTol && reach > base.lo()) diag.overlaps_at_endpoints = false;
    reach = std::max(reach, img.hi());
  }
  diag.covering = !images.empty() && !gap && reach >= base.hi() - kEndpointTol;
  return diag;
}

std::size_t locate(const std::vector<double>& xs, double x) {
  // Index j with xs[j] <= x <= xs[j + 1].
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t j = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
  return std::min(j, xs.size() - 2);
}

struct Stencil {
  std::size_t j;
  double t;
};

Stencil stencil_for(const std::vector<double>& xs, double u) {
  u = std::clamp(u, xs.front(), xs.back());
  const std::size_t j = locate(xs, u);
  return {j, (u - xs[j]) / (xs[j + 1] - xs[j])};
}

}  // namespace

LocalIFS::LocalIFS(Interval base, std::vector<IfsPiece> pieces)
    : base_(base), pieces_(std::move(pieces)) {
  for (std::size_t n = 0; n < pieces_.size(); ++n) {
    const auto& p = pieces_[n];
    if (!p.w.F().is_affine()) {
      throw Error(ErrorKind::InvalidArgument, "local IFS pieces must be affine in y");
    }
    if (!(std::abs(p.s()) < 1.0)) {
      std::ostringstream os;
      os << "piece " << n << " has |s| = " << std::abs(p.s()) << " >= 1";
      throw Error(ErrorKind::NotContractive, os.str());
    }
    if (!base_.contains(p.image())) {
      std::ostringstream os;
      os << "piece " << n << " maps its domain outside the base";
      throw Error(ErrorKind::DomainEscape, os.str());
    }
  }
  cover_ = diagnose_cover(base_, pieces_);
}

double LocalIFS::max_contraction() const {
  double s = 0.0;
  for (const auto& p : pieces_) s = std::max(s, std::abs(p.s()));
  return s;
}

std::size_t LocalIFS::piece_for(double x) const {
  std::size_t found = pieces_.size();
  for (std::size_t n = 0; n < pieces_.size(); ++n) {
    if (pieces_[n].image().contains(x)) found = n;
  }
  return found;
}

std::vector<Point> set_operator_step(const LocalIFS& ifs, const std::vector<Point>& points) {
  std::vector<Point> out;
  for (const auto& p : ifs.pieces()) {
    for (const auto& [x, y] : points) {
      if (p.fractel_domain.contains(x)) out.push_back(p.w(x, y));
    }
  }
  return out;
}

PiecewiseSample PiecewiseSample::from_function(const Interval& dom, std::size_t n,
                                               const std::function<double(double)>& f) {
  PiecewiseSample s;
  s.xs = dom.grid(n);
  s.ys.reserve(n);
  for (double x : s.xs) s.ys.push_back(f(x));
  return s;
}

void PiecewiseSample::validate() const {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw Error(ErrorKind::InvalidArgument, "sample needs >= 2 points and matching lengths");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw Error(ErrorKind::InvalidArgument, "xs not strictly increasing");
  }
}

double PiecewiseSample::interpolate(double x) const {
  const auto [j, t] = stencil_for(xs, x);
  return (1.0 - t) * ys[j] + t * ys[j + 1];
}

FixedPointResult rb_fixed_point(const LocalIFS& ifs, const PiecewiseSample& init,
                                std::size_t iterations) {
  init.validate();
  if (!ifs.covering()) throw Error(ErrorKind::NotCovering, "piece images do not cover the base");
  const Interval& base = ifs.base();
  if (std::abs(init.xs.front() - base.lo()) > kEndpointTol ||
      std::abs(init.xs.back() - base.hi()) > kEndpointTol) {
    throw Error(ErrorKind::InvalidArgument, "initial sample must span the base interval");
  }

  // The per-sample preimage, its interpolation stencil and lambda value do not
  // change between iterations.
  const std::size_t n = init.xs.size();
  struct Plan {
    Stencil at;
    double s;
    double lambda;
  };
  std::vector<Plan> plan(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = ifs.piece_for(init.xs[i]);
    if (k == ifs.pieces().size()) throw Error(ErrorKind::NotCovering, "sample not covered");
    const auto& piece = ifs.pieces()[k];
    const double u = piece.fractel_domain.clamp(piece.w.l().inverse(init.xs[i]));
    plan[i] = {stencil_for(init.xs, u), piece.s(), piece.lambda().raw(u)};
  }

  FixedPointResult result;
  std::vector<double> y = init.ys;
  std::vector<double> next(n);
  for (std::size_t it = 0; it < iterations; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = plan[i];
      const double g = (1.0 - p.at.t) * y[p.at.j] + p.at.t * y[p.at.j + 1];
      next[i] = p.s * g + p.lambda;
      change = std::max(change, std::abs(next[i] - y[i]));
    }
    y.swap(next);
    if (!result.sup_changes.empty() && result.sup_changes.back() > kRatioFloor) {
      result.contraction_ratio =
          std::max(result.contraction_ratio, change / result.sup_changes.back());
    }
    result.sup_changes.push_back(change);
    result.iterations = it + 1;
    if (change < kStopChange) {
      result.converged = true;
      break;
    }
  }
  result.sample = {init.xs, y};

  for (std::size_t i = 0; i < n; ++i) {
    const double x = init.xs[i];
    double lo = y[i];
    double hi = y[i];
    for (const auto& piece : ifs.pieces()) {
      if (!piece.image().contains(x)) continue;
      const double u = piece.fractel_domain.clamp(piece.w.l().inverse(x));
      const double v = piece.s() * result.sample.interpolate(u) + piece.lambda().raw(u);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > kConflictTol) ++result.endpoint_conflicts;
  }
  return result;
}

double evaluate_fixed_point(const LocalIFS& ifs, double x, std::size_t max_depth, double tail) {
  double acc = 0.0;
  double weight = 1.0;
  for (std::size_t depth = 0; depth < max_depth && std::abs(weight) >= 1e-18; ++depth) {
    const std::size_t k = ifs.piece_for(x);
    if (k == ifs.pieces().size()) {
      std::ostringstream os;
      os << "x = " << x << " is not covered by any piece";
      throw Error(ErrorKind::NotCovering, os.str());
    }
    const auto& piece = ifs.pieces()[k];
    const double u = piece.fractel_domain.clamp(piece.w.l().inverse(x));
    acc += weight * piece.lambda().raw(u);
    weight *= piece.s();
    x = u;
  }
  return acc + weight * tail;
}

ScalarFunction power_plus_g_G(double tau, double sigma, const ScalarFunction& g,
                              const Interval& domain) {
  const ScalarFunction shifted = substitute(g, 0.5, 0.5 * tau, domain);
  return (1.0 / (1.0 - sigma)) * (shifted - sigma * g.with_domain(domain));
}

Fractel build_fractel_for_power_plus_g(double /*alpha*/, double tau, double theta,
                                       const ScalarFunction& g, const Interval& domain) {
  if (!(theta > 0.0)) throw Error(ErrorKind::InvalidArgument, "theta must be positive");
  if (!domain.contains(tau)) throw Error(ErrorKind::InvalidArgument, "tau must lie in the domain");
  const double sigma = std::exp2(-theta);
  // (1 - sigma) G(x) = g(l(x)) - sigma g(x)
  ScalarFunction lambda =
      substitute(g, 0.5, 0.5 * tau, domain) - sigma * g.with_domain(domain);
  return Fractel::affine(AffineMap1D(0.5, 0.5 * tau, domain), sigma, lambda.with_domain(domain));
}

double approximate_gamma(const ScalarFunction& G, const Interval& domain, GammaRule rule) {
  auto at = [&](double x) {
    const double v = G(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "G(" << x << ") is not finite";
      throw Error(ErrorKind::NonFinite, os.str());
    }
    return v;
  };
  switch (rule) {
    case GammaRule::Midpoint:
      return at(domain.midpoint());
    case GammaRule::Trapezoid:
      return 0.5 * (at(domain.lo()) + at(domain.hi()));
    case GammaRule::Mean: {
      constexpr std::size_t panels = 1024;
      const double h = domain.length() / panels;
      double sum = at(domain.lo()) + at(domain.hi());
      for (std::size_t i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * at(domain.lo() + h * static_cast<double>(i));
      }
      return sum * h / 3.0 / domain.length();
    }
  }
  return 0.0;
}

LocalIFS build_sqrt_ifs(double sigma2, double sigma3, SqrtMode mode) {
  for (double s : {sigma2, sigma3}) {
    if (!(s >= 0.0 && s <= 0.5)) {
      throw Error(ErrorKind::InvalidArgument, "sigma_i must lie in [0, 1/2]");
    }
  }
  const Interval unit(0.0, 1.0);
  const Interval upper(0.5, 1.0);
  const ScalarFunction root(PowerSum::monomial(1.0, 0.5), unit, "sqrt");

  std::vector<IfsPiece> pieces;
  pieces.push_back({Fractel::affine(AffineMap1D(0.5, 0.0, unit), std::sqrt(0.5), 0.0), unit});

  const double taus[] = {0.5, 1.0};
  const double sigmas[] = {sigma2, sigma3};
  for (int i = 0; i < 2; ++i) {
    const double tau = taus[i];
    const double sigma = sigmas[i];
    const AffineMap1D l(0.5, 0.5 * tau, upper);
    const ScalarFunction G = power_plus_g_G(tau, sigma, root, upper);
    if (mode == SqrtMode::Exact) {
      pieces.push_back({Fractel::affine(l, sigma, (1.0 - sigma) * G), upper});
      continue;
    }
    const GammaRule rule = mode == SqrtMode::Midpoint ? GammaRule::Midpoint
                           : mode == SqrtMode::Mean   ? GammaRule::Mean
                                                      : GammaRule::Trapezoid;
    const double gamma = approximate_gamma(G, upper, rule);
    pieces.push_back({Fractel::affine(l, sigma, (1.0 - sigma) * gamma), upper});
  }
  return LocalIFS(unit, std::move(pieces));
}

std::vector<double> lambda_deviations(const LocalIFS& exact, const LocalIFS& approx,
                                      std::size_t grid) {
  if (exact.pieces().size() != approx.pieces().size()) {
    throw Error(ErrorKind::MapMismatch, "IFSs have different piece counts");
  }
  std::vector<double> devs;
  for (std::size_t n = 0; n < exact.pieces().size(); ++n) {
    const auto& a = exact.pieces()[n];
    const auto& b = approx.pieces()[n];
    double dev = 0.0;
    for (double x : a.fractel_domain.grid(grid)) {
      dev = std::max(dev, std::abs(a.lambda().raw(x) - b.lambda().raw(x)));
    }
    devs.push_back(dev);
  }
  return devs;
}

double error_bound(const std::vector<double>& lambda_devs, double s_max) {
  if (!(s_max >= 0.0 && s_max < 1.0)) {
    throw Error(ErrorKind::ContractionViolation, "s_max must lie in [0, 1)");
  }
  double worst = 0.0;
  for (double d : lambda_devs) worst = std::max(worst, d);
  return worst / (1.0 - s_max);
}

RelativeErrorProfile relative_error_profile(const LocalIFS& ifs, const ScalarFunction& reference,
                                            std::size_t grid, double x_min,
                                            std::size_t max_depth) {
  if (grid < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  const double x_max = ifs.base().hi();
  if (!(x_min > 0.0 && x_min < x_max)) {
    throw Error(ErrorKind::InvalidArgument, "x_min must lie in (0, base.hi)");
  }
  RelativeErrorProfile profile;
  const double log_lo = std::log(x_min);
  const double step = (std::log(x_max) - log_lo) / static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = i + 1 == grid ? x_max : std::exp(log_lo + step * static_cast<double>(i));
    const double ref = reference(x);
    if (ref == 0.0) continue;
    const double e = evaluate_fixed_point(ifs, x, max_depth) / ref - 1.0;
    profile.rows.push_back({x, e});
    profile.max_abs = std::max(profile.max_abs, std::abs(e));
  }
  return profile;
}

VectorFixedPointResult rb_fixed_point_vector(const Interval& base,
                                             const std::vector<VectorIfsPiece>& pieces,
                                             std::vector<double> xs,
                                             std::vector<std::vector<double>> init,
                                             std::size_t iterations) {
  PiecewiseSample check{xs, std::vector<double>(xs.size(), 0.0)};
  check.validate();
  if (init.size() != xs.size()) throw Error(ErrorKind::InvalidArgument, "init length mismatch");
  const std::size_t m = init.front().size();

  struct Plan {
    Stencil at;
    std::size_t piece;
    std::vector<double> offset;
  };
  std::vector<Plan> plan;
  plan.reserve(xs.size());
  for (double x : xs) {
    if (!base.contains(x)) throw Error(ErrorKind::DomainEscape, "sample outside base");
    std::size_t k = pieces.size();
    for (std::size_t n = 0; n < pieces.size(); ++n) {
      if (pieces[n].l.image_of(pieces[n].fractel_domain).contains(x)) k = n;
    }
    if (k == pieces.size()) throw Error(ErrorKind::NotCovering, "sample not covered");
    const auto& p = pieces[k];
    const double u = p.fractel_domain.clamp(p.l.inverse(x));
    plan.push_back({stencil_for(xs, u), k, p.offset ? p.offset(u) : std::vector<double>(m, 0.0)});
  }

  VectorFixedPointResult result;
  std::vector<std::vector<double>> y = std::move(init);
  std::vector<std::vector<double>> next(y.size(), std::vector<double>(m));
  std::vector<double> g(m);
  for (std::size_t it = 0; it < iterations; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& p = plan[i];
      for (std::size_t c = 0; c < m; ++c) {
        g[c] = (1.0 - p.at.t) * y[p.at.j][c] + p.at.t * y[p.at.j + 1][c];
      }
      const auto& M = pieces[p.piece].M;
      for (std::size_t r = 0; r < m; ++r) {
        double v = p.offset[r];
        for (std::size_t c = 0; c < m; ++c) v += M[r][c] * g[c];
        next[i][r] = v;
        change = std::max(change, std::abs(v - y[i][r]));
      }
    }
    y.swap(next);
    result.sup_changes.push_back(change);
    result.iterations = it + 1;
    if (change < kStopChange) break;
  }
  result.xs = std::move(xs);
  result.ys = std::move(y);
  return result;
}

}  // namespace fractel
