#include "diskdiam/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diskdiam/classifier.hpp"
#include "diskdiam/errors.hpp"

namespace diskdiam {

namespace {

constexpr double kPi = std::numbers::pi;

void put_witness(BoundReport& rep, std::initializer_list<Complex> pts) {
  rep.witness.assign(pts.begin(), pts.end());
}

double higher_coefficient_sum(const AnalyticFunction& f, Complex scale) {
  double s = 0.0;
  for (std::size_t k = 2; k <= f.order(); ++k) s += std::abs(scale * f.coefficient(k));
  return s;
}

}  // namespace

DiskDiameter certified_disk_diameter(const AnalyticFunction& f, double width) {
  DiskDiameter out;
  const bool closed = f.closed_form() != nullptr;
  for (double r : {0.9, 0.99, 0.999}) {
    if (r > f.eval_radius()) break;
    out.approach.push_back(image_circle_diameter(f, r, std::max(width, 1e-4)));
  }
  if (closed) {
    out.source = "closed-form";
    out.boundary = closed_form_circle_diameter(f, 1.0, width);
  } else {
    out.source = "series";
    const double R = boundary_radius(f);
    out.boundary = image_circle_diameter(f, R, width);
    if (R < 1.0) out.allowance = 2.0 * (1.0 - R) * series_sup_bound(f, 1.0, 1);
  }
  out.lower = out.boundary.lower;
  out.upper = out.boundary.upper + out.allowance;
  for (std::size_t i = 0; i < out.approach.size(); ++i) {
    const double next_upper =
        i + 1 < out.approach.size() ? out.approach[i + 1].upper : out.upper;
    if (out.approach[i].lower > next_upper) out.monotone = false;
  }
  return out;
}

SupDeviation sup_deviation(const AnalyticFunction& f, std::size_t samples) {
  const double R = boundary_radius(f);
  std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
  c[0] = 0.0;
  const AnalyticFunction centered(std::move(c), f.eval_radius(), f.provenance(), f.tail_bound());
  const CircleMax m = max_modulus_on_circle(centered, R, samples);
  SupDeviation out;
  out.best = m.value;
  out.point = m.point;
  // |F|^2 along the circle is stationary at its maximum; its second angular
  // derivative is bounded by 2 A1^2 + 2 A0 A2.
  const double h = 2.0 * kPi / static_cast<double>(samples);
  const double a0 = series_sup_bound(centered, R, 0);
  const double a1 = R * series_sup_bound(f, R, 1);
  const double a2 = a1 + R * R * series_sup_bound(f, R, 2);
  const double curv = 2.0 * a1 * a1 + 2.0 * a0 * a2;
  out.upper = std::sqrt(m.value * m.value + curv * h * h / 8.0) + 2.0 * f.tail_bound() +
              2.0 * evaluation_error_bound(f, R);
  return out;
}

BoundReport schwarz_growth(const AnalyticFunction& f, Complex z, double sup_bound,
                           const Tolerances& tol) {
  if (!(std::abs(z) < 1.0)) throw DomainError("schwarz_growth: |z| must be below 1");
  if (std::abs(z) > f.eval_radius()) throw DomainError("schwarz_growth: |z| exceeds eval_radius");
  const double lhs = std::abs(evaluate(f, z) - evaluate(f, 0.0));
  BoundReport rep = make_report("schwarz_growth", lhs, std::abs(z) * sup_bound, tol.numeric,
                                tol.equality);
  put_witness(rep, {z});
  rep.tolerances["numeric_tol"] = tol.numeric;
  rep.tolerances["equality_tol"] = tol.equality;
  rep.tolerances["sup_bound"] = sup_bound;
  return rep;
}

BoundReport schwarz_derivative(const AnalyticFunction& f, double sup_bound, const Tolerances& tol) {
  BoundReport rep = make_report("schwarz_derivative", std::abs(f.coefficient(1)), sup_bound,
                                tol.numeric, tol.equality);
  rep.tolerances["numeric_tol"] = tol.numeric;
  rep.tolerances["equality_tol"] = tol.equality;
  rep.tolerances["sup_bound"] = sup_bound;
  return rep;
}

BoundReport landau_toeplitz(const AnalyticFunction& f, const Tolerances& tol) {
  return landau_toeplitz(f, certified_disk_diameter(f, tol.diameter_width), tol);
}

BoundReport landau_toeplitz(const AnalyticFunction& f, const DiskDiameter& diam,
                            const Tolerances& tol) {
  const double c1 = std::abs(f.coefficient(1));
  const double scale = std::max(1.0, std::abs(f.coefficient(0)));
  if (!(diam.lower > 1e-14 * scale)) throw DegenerateInput("landau_toeplitz: Diam f(D) is zero");
  const double lhs = 2.0 * c1 / diam.lower;
  const double induced = 2.0 * c1 * (1.0 / diam.lower - 1.0 / diam.upper);
  BoundReport rep =
      make_report("landau_toeplitz", lhs, 1.0, std::max(tol.numeric, induced), tol.equality);
  const double rigidity = higher_coefficient_sum(f, 2.0 / diam.lower);
  rep.tolerances["numeric_tol"] = std::max(tol.numeric, induced);
  rep.tolerances["equality_tol"] = tol.equality;
  rep.tolerances["rigidity_tol"] = tol.rigidity;
  rep.tolerances["rigidity_sum"] = rigidity;
  rep.tolerances["diam_lower"] = diam.lower;
  rep.tolerances["diam_upper"] = diam.upper;
  if (rep.equality) {
    if (rigidity <= tol.rigidity) {
      rep.detail = "equality; normalized series is linear";
    } else {
      rep.verdict = Verdict::Fail;
      rep.detail = "equality without linearity";
    }
  }
  return rep;
}

BoundReport growth_bound(const AnalyticFunction& f, Complex z, const Tolerances& tol) {
  return growth_bound(f, z, certified_disk_diameter(f, tol.diameter_width), tol);
}

BoundReport growth_bound(const AnalyticFunction& f, Complex z, const DiskDiameter& diam,
                         const Tolerances& tol) {
  const double m = std::abs(z);
  if (!(m > 0.0 && m < 1.0)) throw DomainError("growth_bound: need 0 < |z| < 1");
  if (m > f.eval_radius()) throw DomainError("growth_bound: |z| exceeds eval_radius");
  if (diam.lower > 2.0 + tol.diam_excess) {
    std::ostringstream msg;
    msg << "growth_bound: Diam f(D) = " << diam.lower << " exceeds 2";
    throw PreconditionError(msg.str());
  }
  const double factor = m / (1.0 + std::sqrt(1.0 - m * m));
  const double lhs = std::abs(evaluate(f, z) - evaluate(f, 0.0));
  const double numeric = std::max(tol.numeric, factor * diam.width());
  BoundReport rep = make_report("growth", lhs, factor * diam.lower, numeric, tol.equality);
  put_witness(rep, {z});
  rep.tolerances["numeric_tol"] = numeric;
  rep.tolerances["equality_tol"] = tol.equality;
  rep.tolerances["diam_excess"] = tol.diam_excess;
  rep.tolerances["diam_lower"] = diam.lower;
  rep.tolerances["diam_upper"] = diam.upper;

  const Classification cls = equality_classifier(f, 1e-8);
  if (cls.kind == ExtremalKind::Moebius) {
    const Complex b = cls.b;
    const Complex predicted = 2.0 * b / (1.0 + std::norm(b));
    rep.witness.push_back(predicted);
    const double miss = std::abs(z - predicted);
    rep.tolerances["predicted_distance"] = miss;
    std::ostringstream d;
    if (rep.equality)
      d << (miss <= 1e-3 ? "equality at the predicted point" : "equality away from the predicted point");
    else
      d << "strict; predicted equality point at distance " << miss;
    rep.detail = d.str();
  } else if (rep.equality) {
    rep.detail = "equality for a function outside the extremal family";
  }
  return rep;
}

BoundReport growth_bound_symmetric(const AnalyticFunction& f, Complex z, Complex w,
                                   const Tolerances& tol) {
  return growth_bound_symmetric(f, z, w, certified_disk_diameter(f, tol.diameter_width), tol);
}

BoundReport growth_bound_symmetric(const AnalyticFunction& f, Complex z, Complex w,
                                   const DiskDiameter& diam, const Tolerances& tol) {
  if (z == w) throw ArgumentError("growth_bound_symmetric: z and w must differ");
  if (!(std::abs(z) < 1.0 && std::abs(w) < 1.0))
    throw DomainError("growth_bound_symmetric: z and w must lie in the unit disk");
  if (std::max(std::abs(z), std::abs(w)) > f.eval_radius())
    throw DomainError("growth_bound_symmetric: point exceeds eval_radius");
  if (!(diam.lower > 0.0)) throw DegenerateInput("growth_bound_symmetric: Diam f(D) is zero");
  const double dist = std::abs(evaluate(f, z) - evaluate(f, w));
  const double lhs = dist / diam.lower;
  const double rhs = std::abs(z - w) / (std::abs(1.0 - std::conj(w) * z) +
                                        std::sqrt((1.0 - std::norm(z)) * (1.0 - std::norm(w))));
  const double numeric = std::max(tol.numeric, dist * (1.0 / diam.lower - 1.0 / diam.upper));
  BoundReport rep = make_report("growth_symmetric", lhs, rhs, numeric, tol.equality);
  put_witness(rep, {z, w});
  rep.tolerances["numeric_tol"] = numeric;
  rep.tolerances["equality_tol"] = tol.equality;
  rep.tolerances["diam_lower"] = diam.lower;
  rep.tolerances["diam_upper"] = diam.upper;
  return rep;
}

PoukkaReport poukka(const AnalyticFunction& f, std::size_t n, double r, const Tolerances& tol) {
  return poukka(f, n, r, certified_disk_diameter(f, tol.diameter_width), tol);
}

PoukkaReport poukka(const AnalyticFunction& f, std::size_t n, double r, const DiskDiameter& diam,
                    const Tolerances& tol) {
  if (n < 1 || n > f.order()) throw ArgumentError("poukka: n must lie in [1, truncation order]");
  if (!(r > 0.0 && r <= f.eval_radius())) throw DomainError("poukka: r must lie in (0, eval_radius]");

  PoukkaReport out;
  out.n = n;
  out.c_n = f.coefficient(n);
  out.diam = diam.lower;

  const Complex rot = std::polar(1.0, kPi / static_cast<double>(n));
  out.h_coeffs.resize(f.order() + 1);
  double sum = 0.0;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    const Complex factor = 1.0 - std::polar(1.0, kPi * static_cast<double>(k) / static_cast<double>(n));
    out.h_coeffs[k] = f.coefficient(k) * factor;
    sum += std::norm(out.h_coeffs[k]) * std::pow(r, 2.0 * static_cast<double>(k));
  }
  out.parseval_lhs = sum;

  std::size_t N = std::max<std::size_t>(tol.quadrature_points, 8);
  N = std::max(N, std::bit_ceil(2 * f.order() + 2));
  double acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const Complex z = std::polar(r, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(N));
    acc += std::norm(evaluate(f, z) - evaluate(f, z * rot));
  }
  out.integral_rhs = acc / static_cast<double>(N);

  const double numeric = std::max(tol.numeric, diam.width());
  out.report = make_report("poukka", 2.0 * std::abs(out.c_n), diam.lower, numeric, tol.equality);
  BoundReport& rep = out.report;
  rep.tolerances["numeric_tol"] = numeric;
  rep.tolerances["equality_tol"] = tol.equality;
  rep.tolerances["quadrature_tol"] = tol.quadrature;
  rep.tolerances["quadrature_points"] = static_cast<double>(N);
  rep.tolerances["n"] = static_cast<double>(n);
  rep.tolerances["r"] = r;
  rep.tolerances["parseval_lhs"] = out.parseval_lhs;
  rep.tolerances["integral_rhs"] = out.integral_rhs;
  rep.tolerances["diam_lower"] = diam.lower;
  rep.tolerances["diam_upper"] = diam.upper;

  std::ostringstream d;
  const double mismatch = std::abs(out.parseval_lhs - out.integral_rhs);
  const bool parseval_ok = mismatch <= tol.quadrature * std::max(1.0, out.parseval_lhs);
  const bool integral_ok = out.integral_rhs <= diam.upper * diam.upper + numeric;
  if (!parseval_ok) {
    rep.verdict = Verdict::Fail;
    d << "Parseval mismatch " << mismatch << "; ";
  }
  if (!integral_ok) {
    rep.verdict = Verdict::Fail;
    d << "mean square exceeds Diam^2; ";
  }
  if (rep.equality) {
    double others = 0.0;
    for (std::size_t k = 1; k <= f.order(); ++k)
      if (k != n) others += std::abs(f.coefficient(k));
    const double rel = others / std::max(std::abs(out.c_n), 1e-300);
    rep.tolerances["rigidity_sum"] = rel;
    if (rel <= tol.rigidity) {
      d << "equality; f = f(0) + c z^" << n;
    } else {
      rep.verdict = Verdict::Fail;
      d << "equality without the monomial form";
    }
  }
  rep.detail = d.str();
  if (!rep.detail.empty() && rep.detail.ends_with("; ")) rep.detail.resize(rep.detail.size() - 2);
  return out;
}

SchurDecomposition schur_decompose(const AnalyticFunction& f, const std::vector<double>& radii,
                                   const Tolerances& tol) {
  const SupDeviation sup = sup_deviation(f, tol.scan_points);
  if (sup.best > 1.0 + tol.numeric) {
    std::ostringstream msg;
    msg << "schur_decompose: sup |f - f(0)| = " << sup.best << " exceeds 1";
    throw PreconditionError(msg.str());
  }
  const Complex a = f.coefficient(1);
  const double ma = std::abs(a);
  if (ma >= 1.0 + tol.numeric) throw PreconditionError("schur_decompose: |f'(0)| exceeds 1");

  std::vector<Complex> gc(f.coefficients().begin() + (f.order() >= 1 ? 1 : 0),
                          f.coefficients().end());
  if (f.order() == 0) gc.assign(1, Complex{});
  AnalyticFunction g(gc, f.eval_radius(), Provenance::Composition,
                     f.eval_radius() > 0.0 ? f.tail_bound() / f.eval_radius() : 0.0);

  SchurDecomposition out{a, g, std::nullopt, {}, 0.0};
  const bool unimodular = ma >= 1.0 - 1e-12;
  if (!unimodular) {
    const double rho = std::min(f.eval_radius(), kBoundaryCap);
    const Complex abar = std::conj(a);
    auto quotient = [&g, a, abar](Complex z) {
      const Complex gz = evaluate(g, z);
      return (gz - a) / (z * (1.0 - abar * gz));
    };
    SampledSeries s = series_from_sampler(quotient, rho, kDefaultOrder);
    out.h = AnalyticFunction(std::move(s.coefficients), s.eval_radius, Provenance::Composition,
                             s.tail);

    const double rr = std::min(0.9, out.h->eval_radius());
    const Complex f0 = evaluate(f, 0.0);
    double err = 0.0;
    for (std::size_t j = 0; j < 64; ++j) {
      const Complex z = std::polar(rr, 2.0 * kPi * static_cast<double>(j) / 64.0);
      const Complex zh = z * evaluate(*out.h, z);
      const Complex rebuilt = f0 + z * (a + zh) / (1.0 + abar * zh);
      err = std::max(err, std::abs(evaluate(f, z) - rebuilt));
    }
    out.reconstruction_error = err;
  }

  const AnalyticFunction resid = linearization_residual(f);
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("schur_decompose: radii must lie in (0,1)");
    if (r > f.eval_radius()) throw DomainError("schur_decompose: radius exceeds eval_radius");
    const CircleMax m = max_modulus_on_circle(resid, r, tol.scan_points);
    const double rhs = (1.0 - ma * ma) * r * r / (1.0 - ma * r);
    BoundReport rep = make_report("schur", m.value, std::max(rhs, 0.0), tol.numeric, tol.equality);
    put_witness(rep, {m.point});
    rep.tolerances["r"] = r;
    rep.tolerances["numeric_tol"] = tol.numeric;
    rep.tolerances["equality_tol"] = tol.equality;
    if (unimodular) rep.detail = "|f'(0)| = 1; linear branch";
    out.residuals.push_back(std::move(rep));
  }
  return out;
}

BoundReport fixed_point_lemma_check(const AnalyticFunction& g, Complex w, double hypothesis_tol) {
  const double r = std::abs(w);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("fixed_point_lemma: need 0 < |w| < 1");
  if (r > g.eval_radius()) throw DomainError("fixed_point_lemma: |w| exceeds eval_radius");
  if (!(hypothesis_tol > 0.0)) throw ArgumentError("fixed_point_lemma: tolerance must be positive");

  const Complex gw = evaluate(g, w);
  const double fixed = std::abs(gw - w);
  const CircleMax scan = max_modulus_on_circle(g, r, 1024);
  const bool max_ok = scan.value <= r + hypothesis_tol;
  const bool attained = std::abs(gw) >= scan.value - hypothesis_tol;

  const double lhs = std::abs(std::imag(derivative_at(g, w)));
  const double a0 = r + hypothesis_tol;
  const double a1 = r * series_sup_bound(g, r, 1);
  const double a2 = a1 + r * r * series_sup_bound(g, r, 2);
  const double phi2 = 2.0 * a1 * a1 + 2.0 * a0 * a2;
  const double slack = 4.0 * r * hypothesis_tol;
  const double derived = std::sqrt(2.0 * phi2 * slack) / (2.0 * r * r) + 1e-12;

  BoundReport rep = make_report("fixed_point_lemma", lhs, derived, 0.0, 0.0);
  rep.equality = false;
  put_witness(rep, {w});
  rep.tolerances["hypothesis_tol"] = hypothesis_tol;
  rep.tolerances["derived_tol"] = derived;
  rep.tolerances["fixed_point_defect"] = fixed;
  rep.tolerances["circle_max"] = scan.value;
  if (!(fixed <= hypothesis_tol && max_ok && attained)) {
    rep.verdict = Verdict::HypothesisNotMet;
    std::ostringstream d;
    if (fixed > hypothesis_tol) d << "g(w) != w (defect " << fixed << ")";
    else if (!max_ok) d << "max |g| on |z| = |w| exceeds |w|";
    else d << "max |g| on |z| = |w| not attained at w";
    rep.detail = d.str();
  }
  return rep;
}

AnalyticFunction make_fixed_point_witness(const AnalyticFunction& f, Complex w) {
  const Complex d0 = f.coefficient(1);
  if (d0 == Complex{}) throw DegenerateInput("fixed_point_witness: f'(0) is zero");
  const Complex lambda = 1.0 / (2.0 * d0);
  return f.affine(lambda, -evaluate(f, -w) * lambda);
}

}  // namespace diskdiam
