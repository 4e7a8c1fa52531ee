#include "diskdiam/diameter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "diskdiam/errors.hpp"
#include "diskdiam/planar.hpp"

namespace diskdiam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct CircleSampler {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> first;
  std::function<Complex(Complex)> second;
  double first_bound = 0.0;   // sup |f'| on |z| <= r
  double second_bound = 0.0;  // sup |f''| on |z| <= r
  double extra = 0.0;         // truncation + rounding allowance on a distance
};

struct PairState {
  double alpha = 0.0;
  double beta = 0.0;
  double psi = 0.0;
};

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

// Newton ascent on psi(alpha, beta) = |F(alpha) - F(beta)|^2.
PairState polish_pair(const CircleSampler& s, double r, PairState p, double h) {
  for (int it = 0; it < 8; ++it) {
    const Complex za = std::polar(r, p.alpha), zb = std::polar(r, p.beta);
    const Complex fa = s.value(za), fb = s.value(zb);
    const Complex da = s.first(za), db = s.first(zb);
    const Complex F1a = kI * za * da, F1b = kI * zb * db;
    const Complex F2a = -za * da - za * za * s.second(za);
    const Complex F2b = -zb * db - zb * zb * s.second(zb);
    const Complex delta = fa - fb;
    const double ga = 2.0 * std::real(std::conj(delta) * F1a);
    const double gb = -2.0 * std::real(std::conj(delta) * F1b);
    const double haa = 2.0 * std::norm(F1a) + 2.0 * std::real(std::conj(delta) * F2a);
    const double hbb = 2.0 * std::norm(F1b) - 2.0 * std::real(std::conj(delta) * F2b);
    const double hab = -2.0 * std::real(std::conj(F1a) * F1b);
    const double det = haa * hbb - hab * hab;
    if (!(haa < 0.0 && det > 0.0)) break;
    double sa = (-hbb * ga + hab * gb) / det;
    double sb = (hab * ga - haa * gb) / det;
    const double big = std::max(std::abs(sa), std::abs(sb));
    if (big > h) {
      sa *= h / big;
      sb *= h / big;
    }
    PairState trial{p.alpha + sa, p.beta + sb, 0.0};
    trial.psi = std::norm(s.value(std::polar(r, trial.alpha)) - s.value(std::polar(r, trial.beta)));
    if (!(trial.psi > p.psi)) break;
    p = trial;
    if (big < 1e-15) break;
  }
  return p;
}

DiameterEstimate estimate_with(const CircleSampler& s, double r, double tol,
                               const DiameterOptions& opt) {
  if (!(tol > 0.0)) throw ArgumentError("diameter: tol must be positive");
  const double a1 = r * s.first_bound;
  const double a2 = r * s.first_bound + r * r * s.second_bound;

  std::size_t n = std::bit_ceil(std::max<std::size_t>(opt.initial_samples, 8));
  std::vector<Complex> images;
  DiameterEstimate est;
  est.r = r;
  for (;;) {
    n = std::min(n, opt.max_samples);
    const double h = kTwoPi / static_cast<double>(n);
    images.resize(n);
    for (std::size_t j = 0; j < n; ++j) images[j] = s.value(std::polar(r, h * static_cast<double>(j)));
    const FarthestPair fp = farthest_pair(images);
    const double grid_max = fp.distance;

    const double d_bound = grid_max + a1 * h;
    const double hess = 4.0 * a1 * a1 + 2.0 * d_bound * a2;
    const double second_order = std::sqrt(grid_max * grid_max + hess * h * h / 4.0);
    const double upper = std::min(second_order, d_bound) + s.extra;

    PairState p{h * static_cast<double>(fp.i), h * static_cast<double>(fp.j),
                grid_max * grid_max};
    if (opt.polish && grid_max > 0.0) p = polish_pair(s, r, p, h);
    p.alpha = wrap_angle(p.alpha);
    p.beta = wrap_angle(p.beta);
    if (p.beta < p.alpha) std::swap(p.alpha, p.beta);

    est.witness = {std::polar(r, p.alpha), std::polar(r, p.beta)};
    est.lower = std::abs(s.value(est.witness[0]) - s.value(est.witness[1]));
    est.upper = std::max(upper, est.lower);
    est.samples_used = n;
    if (est.width() <= tol) return est;

    const double room = 0.9 * tol - s.extra;
    if (n >= opt.max_samples || room <= 0.0) {
      std::ostringstream msg;
      msg << "diameter: tolerance " << tol << " not reached at r = " << r << " with " << n
          << " samples (width " << est.width() << ")";
      throw BudgetExceeded(msg.str(), est);
    }
    // Smallest h with the second-order bound inside the room.
    const double target = (grid_max + room) * (grid_max + room) - grid_max * grid_max;
    const double h_needed = hess > 0.0 ? std::sqrt(4.0 * target / hess) : h / 2;
    const double wanted = kTwoPi / std::max(h_needed, 1e-300);
    std::size_t next = wanted >= static_cast<double>(opt.max_samples)
                           ? opt.max_samples
                           : std::bit_ceil(static_cast<std::size_t>(wanted) + 1);
    n = std::max(next, 2 * n);
  }
}

}  // namespace

DiameterEstimate image_circle_diameter(const AnalyticFunction& f, double r, double tol,
                                       const DiameterOptions& options) {
  if (!(r > 0.0)) throw DomainError("diameter: r must be positive");
  if (r > f.eval_radius() * (1.0 + 1e-12)) throw DomainError("diameter: r exceeds eval_radius");
  r = std::min(r, f.eval_radius());
  CircleSampler s;
  s.value = [&f](Complex z) { return evaluate(f, z); };
  s.first = [&f](Complex z) { return derivative_at(f, z); };
  s.second = [&f](Complex z) { return second_derivative_at(f, z); };
  s.first_bound = series_sup_bound(f, r, 1);
  s.second_bound = series_sup_bound(f, r, 2);
  s.extra = 2.0 * f.tail_bound() + 2.0 * evaluation_error_bound(f, r);
  return estimate_with(s, r, tol, options);
}

DiameterEstimate closed_form_circle_diameter(const AnalyticFunction& f, double r, double tol,
                                             const DiameterOptions& options) {
  const ClosedForm* cf = f.closed_form();
  if (!cf) throw ArgumentError("diameter: function carries no closed form");
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("diameter: r must lie in (0,1]");
  CircleSampler s;
  s.value = cf->value;
  s.first = cf->first;
  s.second = cf->second;
  s.first_bound = cf->first_bound(r);
  s.second_bound = cf->second_bound(r);
  const double scale = std::abs(cf->value(0.0)) + r * s.first_bound;
  s.extra = 32.0 * std::numeric_limits<double>::epsilon() * (scale + 1.0);
  return estimate_with(s, r, tol, options);
}

BoundReport boundary_attainment_check(const AnalyticFunction& f, double r,
                                      std::size_t interior_samples, std::uint64_t seed,
                                      double tol) {
  const DiameterEstimate boundary = image_circle_diameter(f, r, 1e-6);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] { return std::polar(r * std::sqrt(unit(rng)), kTwoPi * unit(rng)); };

  double best = 0.0;
  Complex bz{}, bw{};
  for (std::size_t k = 0; k < interior_samples; ++k) {
    const Complex z = draw(), w = draw();
    const double d = std::abs(evaluate(f, z) - evaluate(f, w));
    if (d > best) {
      best = d;
      bz = z;
      bw = w;
    }
  }
  BoundReport rep = make_report("boundary_attainment", best, boundary.upper, tol, 0.0);
  rep.equality = false;
  rep.witness = {bz, bw};
  rep.tolerances["diameter_width"] = boundary.width();
  rep.tolerances["r"] = r;
  return rep;
}

std::vector<double> default_ratio_grid() {
  std::vector<double> g(17);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = 0.05 + 0.9 * static_cast<double>(i) / 16.0;
  return g;
}

RatioCurve ratio_curve(const AnalyticFunction& f, const std::vector<double>& grid, double tol) {
  if (grid.empty()) throw ArgumentError("ratio_curve: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || grid[i] > f.eval_radius())
      throw ArgumentError("ratio_curve: radii must lie in (0, eval_radius]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ArgumentError("ratio_curve: grid must be strictly increasing");
  }
  RatioCurve curve;
  curve.grid = grid;
  for (double r : grid) {
    const DiameterEstimate e = image_circle_diameter(f, r, tol * r);
    curve.ratios.push_back({r, e.lower / r, e.upper / r});
  }
  for (std::size_t i = 0; i + 1 < curve.ratios.size(); ++i) {
    const RatioPoint& a = curve.ratios[i];
    const RatioPoint& b = curve.ratios[i + 1];
    const double drop = a.midpoint() - b.midpoint();
    if (drop > a.width() + b.width())
      curve.violations.push_back(i);
    else if (drop > 0.0)
      curve.near_ties.push_back(i);
  }
  return curve;
}

BoundReport linearity_probe(const RatioCurve& curve, const AnalyticFunction& f, double tol) {
  if (curve.ratios.empty()) throw ArgumentError("linearity_probe: empty curve");
  std::size_t hi = 0, lo = 0;
  for (std::size_t i = 1; i < curve.ratios.size(); ++i) {
    if (curve.ratios[i].midpoint() > curve.ratios[hi].midpoint()) hi = i;
    if (curve.ratios[i].midpoint() < curve.ratios[lo].midpoint()) lo = i;
  }
  const double spread = curve.ratios[hi].midpoint() - curve.ratios[lo].midpoint();
  const double widths = curve.ratios[hi].width() + curve.ratios[lo].width();
  const bool ratio_constant = spread <= widths + tol;

  const double c1 = std::abs(f.coefficient(1));
  double higher = 0.0;
  for (std::size_t k = 2; k <= f.order(); ++k) higher = std::max(higher, std::abs(f.coefficient(k)));
  const bool linear = c1 > 0.0 ? higher <= 1e-9 * c1 : higher == 0.0;

  BoundReport rep = make_report("linearity", spread, widths + tol, 0.0, 0.0);
  rep.equality = ratio_constant;
  rep.tolerances["tol"] = tol;
  rep.tolerances["max_higher_coefficient"] = higher;
  std::ostringstream d;
  d << "ratio " << (ratio_constant ? "constant" : "non-constant") << ", coefficients "
    << (linear ? "linear" : "nonlinear");
  // A nonlinear series may raise D_r / r by less than the resolution, so only
  // a linear series with a certified change in the ratio contradicts.
  if (linear) {
    rep.verdict = ratio_constant ? Verdict::Pass : Verdict::Fail;
  } else if (ratio_constant) {
    rep.verdict = Verdict::Inconclusive;
    d << ", increase below resolution";
  } else {
    rep.verdict = Verdict::Pass;
  }
  rep.detail = d.str();
  return rep;
}

}  // namespace diskdiam
