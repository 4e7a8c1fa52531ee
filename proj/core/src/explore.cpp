#include "diskdiam/explore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diskdiam/bounds.hpp"
#include "diskdiam/errors.hpp"
#include "diskdiam/families.hpp"
#include "diskdiam/hyperbolic.hpp"

namespace diskdiam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;

AnalyticFunction shifted(const AnalyticFunction& f, Complex by) {
  std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
  c[0] -= by;
  return AnalyticFunction(std::move(c), f.eval_radius(), f.provenance(), f.tail_bound());
}

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

}  // namespace

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::LftExtremal: return "lft-extremal";
    case FamilyKind::SchurExtremal: return "schur-extremal";
    case FamilyKind::RandomPolynomial: return "random-polynomial";
    case FamilyKind::UnivalentQuadratic: return "univalent-quadratic";
  }
  return "lft-extremal";
}

FamilyKind family_kind_from_string(std::string_view s) {
  for (FamilyKind k : {FamilyKind::LftExtremal, FamilyKind::SchurExtremal,
                       FamilyKind::RandomPolynomial, FamilyKind::UnivalentQuadratic})
    if (s == to_string(k)) return k;
  throw ArgumentError("unknown family kind: " + std::string(s));
}

std::vector<FamilyMember> family_members(const FamilySpec& spec) {
  if (!(spec.target_diam > 0.0)) throw ArgumentError("family: target_diam must be positive");
  std::vector<FamilyMember> out;
  auto push = [&](std::map<std::string, double> params, const AnalyticFunction& f) {
    const AnalyticFunction g = normalize_diameter(f, spec.target_diam);
    out.push_back({out.size(), std::move(params), g});
  };
  switch (spec.kind) {
    case FamilyKind::LftExtremal:
      for (double b : spec.grid) {
        if (!(b > 0.0 && b < 1.0)) throw ArgumentError("lft-extremal: b must lie in (0,1)");
        push({{"b", b}}, make_extremal_lft(0.0, b, 1.0));
      }
      break;
    case FamilyKind::SchurExtremal:
      for (double a : spec.grid) {
        if (!(a > 0.0 && a <= 1.0)) throw ArgumentError("schur-extremal: |a| must lie in (0,1]");
        push({{"a", a}}, make_schur_extremal(a, 0.0));
      }
      break;
    case FamilyKind::RandomPolynomial: {
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = 0; i < spec.count; ++i) {
        const AnalyticFunction p = random_polynomial(rng);
        push({{"degree", static_cast<double>(p.order())}}, p);
      }
      break;
    }
    case FamilyKind::UnivalentQuadratic:
      for (double eps : spec.grid) {
        if (!(eps >= 0.0 && eps <= 0.25))
          throw ArgumentError("univalent-quadratic: eps must lie in [0, 1/4]");
        push({{"eps", eps}}, AnalyticFunction::polynomial({0.0, 1.0, eps}));
      }
      break;
  }
  return out;
}

SweepResult phi_profile(const FamilySpec& family, const std::vector<double>& r_grid) {
  SweepResult out;
  out.name = "phi_profile";
  out.grid = r_grid;
  out.seed = family.seed;
  out.tolerances["degenerate_derivative"] = 1e-12;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] >= 0.0 && r_grid[i] < 1.0))
      throw ArgumentError("phi_profile: radii must lie in [0,1)");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
      throw ArgumentError("phi_profile: radii must increase");
  }
  std::vector<double> env(r_grid.size(), 0.0);
  std::vector<bool> touched(r_grid.size(), false);
  for (const FamilyMember& m : family_members(family)) {
    const double a = std::abs(m.f.coefficient(1));
    if (a >= 1.0 - 1e-12) {
      std::ostringstream d;
      d << "member " << m.id << " skipped: |f'(0)| = " << a;
      out.diagnostics.push_back(d.str());
      continue;
    }
    const AnalyticFunction resid = linearization_residual(m.f);
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
      const double r = r_grid[i];
      if (r > m.f.eval_radius()) throw DomainError("phi_profile: radius exceeds eval_radius");
      const double v = r == 0.0 ? 0.0 : max_modulus_on_circle(resid, r, 1024).value / (1.0 - a);
      out.records.push_back({m.id, m.params, r, v});
      env[i] = touched[i] ? std::max(env[i], v) : v;
      touched[i] = true;
    }
  }
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    if (touched[i]) out.envelope.push_back({r_grid[i], env[i]});
  return out;
}

SweepResult problem2_sweep(const std::vector<double>& eps_grid, std::size_t grid_resolution) {
  SweepResult out;
  out.name = "problem2";
  out.grid = eps_grid;
  out.tolerances["grid_resolution"] = static_cast<double>(grid_resolution);
  FamilySpec spec{FamilyKind::UnivalentQuadratic, eps_grid, 0, 0, 2.0};
  for (const FamilyMember& m : family_members(spec)) {
    const DomainMap dom(m.f, "z + eps z^2");
    const DensityProfile p = min_density(dom, grid_resolution);
    auto params = m.params;
    params["Lambda"] = p.Lambda;
    params["R_h"] = p.R_h;
    params["proxy_radius"] = p.proxy_radius;
    out.records.push_back({m.id, std::move(params), p.Lambda - 1.0, p.R_h});
  }
  std::vector<SweepRecord> sorted = out.records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.abscissa < b.abscissa; });
  double run = -std::numeric_limits<double>::infinity();
  for (const SweepRecord& r : sorted) {
    run = std::max(run, r.value);
    if (!out.envelope.empty() && out.envelope.back().abscissa == r.abscissa)
      out.envelope.back().value = run;
    else
      out.envelope.push_back({r.abscissa, run});
  }
  return out;
}

SweepResult problem3_sweep(const FamilySpec& family, std::size_t w_res) {
  if (w_res < 2) throw ArgumentError("problem3_sweep: w grid resolution must be at least 2");
  SweepResult out;
  out.name = "problem3";
  out.grid = family.grid;
  out.seed = family.seed;
  out.tolerances["w_grid_resolution"] = static_cast<double>(w_res);

  for (const FamilyMember& m : family_members(family)) {
    const AnalyticFunction& f = m.f;
    const double R = boundary_radius(f);
    const double allowance = R < 1.0 ? (1.0 - R) * series_sup_bound(f, 1.0, 1) : 0.0;
    const double wcap = std::min(0.995, f.eval_radius() * (1.0 - 1e-12));
    auto sup_from = [&](Complex w) {
      if (std::abs(w) > wcap) w *= wcap / std::abs(w);
      return max_modulus_on_circle(shifted(f, evaluate(f, w)), R, 512).value;
    };

    Complex wbest = 0.0;
    double best = sup_from(0.0);
    const std::size_t nt = 2 * w_res;
    for (std::size_t i = 1; i <= w_res; ++i) {
      const double r = wcap * static_cast<double>(i) / static_cast<double>(w_res);
      for (std::size_t j = 0; j < nt; ++j) {
        const Complex w = std::polar(r, kTwoPi * static_cast<double>(j) / static_cast<double>(nt));
        const double v = sup_from(w);
        if (v < best - 1e-12) {
          best = v;
          wbest = w;
        }
      }
    }
    double span = 2.0 * wcap / static_cast<double>(w_res);
    for (int cycle = 0; cycle < 12 && span > 1e-10; ++cycle) {
      const double x = golden_section([&](double t) { return sup_from({t, wbest.imag()}); },
                                      wbest.real() - span, wbest.real() + span, 48);
      const double y = golden_section([&](double t) { return sup_from({x, t}); },
                                      wbest.imag() - span, wbest.imag() + span, 48);
      Complex wn{x, y};
      if (std::abs(wn) > wcap) wn *= wcap / std::abs(wn);
      const double vn = sup_from(wn);
      if (vn < best) {
        span = std::max(4.0 * std::abs(wn - wbest), 0.25 * span);
        best = vn;
        wbest = wn;
      } else {
        span *= 0.25;
      }
    }

    const double M = best + allowance;
    const double a = std::abs(derivative_at(f, wbest)) * (1.0 - std::norm(wbest));
    const DiskDiameter diam = certified_disk_diameter(f);
    auto params = m.params;
    params["M"] = M;
    params["w_re"] = wbest.real();
    params["w_im"] = wbest.imag();
    params["diam_lower"] = diam.lower;
    params["diam_upper"] = diam.upper;
    params["proxy_radius"] = R;
    out.records.push_back({m.id, std::move(params), a, M});
  }
  std::vector<SweepRecord> sorted = out.records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.abscissa > b.abscissa; });
  double run = -std::numeric_limits<double>::infinity();
  std::vector<EnvelopePoint> env;
  for (const SweepRecord& r : sorted) {
    run = std::max(run, r.value);
    if (!env.empty() && env.back().abscissa == r.abscissa)
      env.back().value = run;
    else
      env.push_back({r.abscissa, run});
  }
  std::reverse(env.begin(), env.end());
  out.envelope = std::move(env);
  return out;
}

}  // namespace diskdiam
