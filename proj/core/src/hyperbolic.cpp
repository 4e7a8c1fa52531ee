#include "diskdiam/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "diskdiam/bounds.hpp"
#include "diskdiam/errors.hpp"

namespace diskdiam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGridCap = 0.995;
constexpr double kInvPhi = 0.6180339887498949;

// Minimizes phi on [lo, hi]; returns the abscissa.
template <class F>
double golden_section(F&& phi, double lo, double hi, int iterations) {
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = phi(x1), f2 = phi(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = phi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = phi(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

Complex clamp_to_disk(Complex z, double cap) {
  const double m = std::abs(z);
  return m > cap ? z * (cap / m) : z;
}

}  // namespace

DomainMap::DomainMap(AnalyticFunction f, std::string label, std::uint64_t seed, std::size_t pairs)
    : f_(std::move(f)), label_(std::move(label)) {
  const double R = std::min(f_.eval_radius(), kBoundaryCap);
  const double lip = series_sup_bound(f_, R, 1);
  if (!(lip > 0.0)) throw UnivalenceViolation("DomainMap: constant map");
  if (std::abs(f_.coefficient(1)) < 1e-12)
    throw UnivalenceViolation("DomainMap: derivative vanishes at the origin");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] { return std::polar(R * std::sqrt(unit(rng)), kTwoPi * unit(rng)); };
  for (std::size_t k = 0; k < pairs; ++k) {
    // Odd draws pair z with -z, which catches even maps.
    const Complex z = draw();
    const Complex w = k % 2 == 1 ? -z : draw();
    const double sep = std::abs(z - w);
    if (sep < 1e-9) continue;
    if (std::abs(evaluate(f_, z) - evaluate(f_, w)) <= 1e-10 * lip * sep) {
      std::ostringstream msg;
      msg << "DomainMap: images of " << z << " and " << w << " collide";
      throw UnivalenceViolation(msg.str());
    }
    if (std::abs(derivative_at(f_, z)) < 1e-12)
      throw UnivalenceViolation("DomainMap: derivative vanishes at a sampled point");
  }
}

double density_at(const DomainMap& dom, Complex z) {
  const double m = std::abs(z);
  if (!(m < 1.0)) throw DomainError("density_at: z must lie in the open unit disk");
  if (m > dom.f().eval_radius()) throw DomainError("density_at: |z| exceeds eval_radius");
  const double d = std::abs(derivative_at(dom.f(), z));
  if (d < 1e-12) throw UnivalenceViolation("density_at: f' vanishes");
  return 1.0 / ((1.0 - m * m) * d);
}

DensityProfile min_density(const DomainMap& dom, std::size_t grid_resolution, double tol) {
  if (grid_resolution < 8) throw ArgumentError("min_density: grid_resolution must be at least 8");
  const AnalyticFunction& f = dom.f();
  const double cap = std::min(kGridCap, f.eval_radius() * (1.0 - 1e-12));
  const std::size_t nr = grid_resolution;
  const std::size_t nt = 2 * grid_resolution;

  DensityProfile out;
  auto sample = [&](Complex z) {
    out.points.push_back({z, evaluate(f, z), density_at(dom, z)});
    return out.points.back().rho;
  };
  double best = sample(0.0);
  Complex zbest = 0.0;
  for (std::size_t i = 1; i <= nr; ++i) {
    const double r = cap * static_cast<double>(i) / static_cast<double>(nr);
    for (std::size_t j = 0; j < nt; ++j) {
      const Complex z = std::polar(r, kTwoPi * static_cast<double>(j) / static_cast<double>(nt));
      const double v = sample(z);
      if (v < best) {
        best = v;
        zbest = z;
      }
    }
  }

  auto rho = [&](Complex z) { return density_at(dom, clamp_to_disk(z, cap)); };
  double span = 2.0 * cap / static_cast<double>(nr) + kTwoPi * cap / static_cast<double>(nt);
  Complex z = zbest;
  double v = best;
  for (int cycle = 0; cycle < 24 && span > 1e-12; ++cycle) {
    const double x = golden_section(
        [&](double t) { return rho({t, z.imag()}); }, z.real() - span, z.real() + span, 64);
    Complex zx = clamp_to_disk({x, z.imag()}, cap);
    const double y = golden_section(
        [&](double t) { return rho({zx.real(), t}); }, zx.imag() - span, zx.imag() + span, 64);
    const Complex zn = clamp_to_disk({zx.real(), y}, cap);
    const double vn = rho(zn);
    if (vn < v) {
      span = std::max(std::abs(zn - z) * 4.0, span * 0.25);
      z = zn;
      v = vn;
    } else {
      span *= 0.25;
    }
  }
  out.Lambda = v;
  out.argmin = z;
  out.tau = evaluate(f, z);

  out.proxy_radius = boundary_radius(f);
  std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
  c[0] -= out.tau;
  const AnalyticFunction centered(std::move(c), f.eval_radius(), f.provenance(), f.tail_bound());
  out.R_h = max_modulus_on_circle(centered, out.proxy_radius, 1024).value;

  const DiskDiameter diam = certified_disk_diameter(f, 1e-7);
  out.corollary = make_report("hyperbolic_density", 2.0 / diam.upper, out.Lambda, tol, tol);
  out.corollary.witness = {out.argmin, out.tau};
  out.corollary.tolerances["tol"] = tol;
  out.corollary.tolerances["diam_lower"] = diam.lower;
  out.corollary.tolerances["diam_upper"] = diam.upper;
  out.corollary.tolerances["proxy_radius"] = out.proxy_radius;
  if (out.corollary.equality) out.corollary.detail = "minimum density at the disk value";
  return out;
}

BoundReport monotonicity_check(const DomainMap& inner, const DomainMap& outer,
                               const AnalyticFunction& embed, std::size_t grid, double tol) {
  if (grid < 2) throw ArgumentError("monotonicity_check: grid must be at least 2");
  const double R = 0.9 * std::min({inner.f().eval_radius(), embed.eval_radius(), 1.0});
  const double scale = std::max(1.0, series_sup_bound(inner.f(), R, 0));

  double worst = std::numeric_limits<double>::infinity();
  double worst_inner = 0.0, worst_outer = 0.0;
  Complex worst_z{};
  double worst_gap = 0.0;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double r = R * static_cast<double>(i) / static_cast<double>(grid);
    const std::size_t nt = i == 0 ? 1 : 2 * grid;
    for (std::size_t j = 0; j < nt; ++j) {
      const Complex z = std::polar(r, kTwoPi * static_cast<double>(j) / static_cast<double>(nt));
      const Complex e = evaluate(embed, z);
      if (!(std::abs(e) < 1.0) || std::abs(e) > outer.f().eval_radius())
        throw PreconditionError("monotonicity_check: embed leaves the disk");
      const double gap = std::abs(evaluate(inner.f(), z) - evaluate(outer.f(), e));
      worst_gap = std::max(worst_gap, gap);
      if (gap > 1e-9 * scale)
        throw PreconditionError("monotonicity_check: inner differs from outer ∘ embed");
      const double ri = density_at(inner, z);
      const double ro = density_at(outer, e);
      if (ri - ro < worst) {
        worst = ri - ro;
        worst_inner = ri;
        worst_outer = ro;
        worst_z = z;
      }
    }
  }
  BoundReport rep = make_report("density_monotonicity", worst_outer, worst_inner, tol, tol);
  rep.witness = {worst_z};
  rep.tolerances["tol"] = tol;
  rep.tolerances["subordination_gap"] = worst_gap;
  return rep;
}

}  // namespace diskdiam
