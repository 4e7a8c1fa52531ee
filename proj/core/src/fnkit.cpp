#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "diskdiam/errors.hpp"
#include "diskdiam/fnkit.hpp"

namespace diskdiam {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Polynomial:
      return "polynomial";
    case Provenance::Moebius:
      return "moebius";
    case Provenance::Composition:
      return "composition";
    case Provenance::ExtremalLft:
      return "extremal-lft";
    case Provenance::SchurExtremal:
      return "schur-extremal";
  }
  return "unknown";
}

AnalyticFunction::AnalyticFunction(std::vector<Complex> coefficients, double eval_radius,
                                   Provenance provenance, double tail_bound,
                                   std::shared_ptr<const ClosedForm> closed_form)
    : coefficients_(std::move(coefficients)),
      eval_radius_(eval_radius),
      provenance_(provenance),
      tail_bound_(tail_bound),
      closed_form_(std::move(closed_form)) {
  if (coefficients_.empty()) throw ArgumentError("analytic function needs at least one coefficient");
  if (!(eval_radius_ > 0.0 && eval_radius_ <= 1.0))
    throw ArgumentError("eval_radius must lie in (0,1]");
  if (!(tail_bound_ >= 0.0)) throw ArgumentError("tail bound must be nonnegative");
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coefficients) {
  return AnalyticFunction(std::move(coefficients));
}

AnalyticFunction AnalyticFunction::identity() { return polynomial({0.0, 1.0}); }

AnalyticFunction AnalyticFunction::constant(Complex value) { return polynomial({value}); }

AnalyticFunction AnalyticFunction::monomial(std::size_t degree, Complex coefficient) {
  std::vector<Complex> c(degree + 1);
  c[degree] = coefficient;
  return polynomial(std::move(c));
}

AnalyticFunction AnalyticFunction::affine(Complex lambda, Complex shift) const {
  std::vector<Complex> c(coefficients_);
  for (auto& ck : c) ck *= lambda;
  c[0] += shift;
  std::shared_ptr<const ClosedForm> cf;
  if (closed_form_) {
    auto base = closed_form_;
    const double m = std::abs(lambda);
    ClosedForm out;
    out.value = [base, lambda, shift](Complex z) { return lambda * base->value(z) + shift; };
    out.first = [base, lambda](Complex z) { return lambda * base->first(z); };
    out.second = [base, lambda](Complex z) { return lambda * base->second(z); };
    out.first_bound = [base, m](double r) { return m * base->first_bound(r); };
    out.second_bound = [base, m](double r) { return m * base->second_bound(r); };
    cf = std::make_shared<const ClosedForm>(std::move(out));
  }
  return AnalyticFunction(std::move(c), eval_radius_, provenance_, tail_bound_ * std::abs(lambda),
                          std::move(cf));
}

AnalyticFunction AnalyticFunction::with_coefficients(std::vector<Complex> coefficients) const {
  return AnalyticFunction(std::move(coefficients), eval_radius_, provenance_, tail_bound_,
                          closed_form_);
}

namespace {

void check_domain(const AnalyticFunction& f, Complex z) {
  if (std::abs(z) > f.eval_radius() * (1.0 + 1e-12) + 1e-15)
    throw DomainError("evaluation point outside the certified radius");
}

struct Truncation {
  std::size_t order;
  double radius;
  double tail;
};

// Smallest order meeting the tail budget, on the closed disk if possible and
// otherwise at the boundary cap; at the order ceiling the radius gives way.
template <typename TailFn>
Truncation choose_truncation(TailFn tail) {
  for (double r : {1.0, kBoundaryCap}) {
    std::size_t hi = kDefaultOrder;
    while (hi < kMaxOrder && tail(hi, r) > kTailBudget) hi *= 2;
    if (tail(hi, r) > kTailBudget) continue;
    std::size_t lo = hi == kDefaultOrder ? 1 : hi / 2;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (tail(mid, r) <= kTailBudget)
        hi = mid;
      else
        lo = mid + 1;
    }
    hi = std::max(hi, kDefaultOrder);
    return {hi, r, tail(hi, r)};
  }
  double lo = 0.0, hi = kBoundaryCap;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail(kMaxOrder, mid) <= kTailBudget ? lo : hi) = mid;
  }
  return {kMaxOrder, lo, tail(kMaxOrder, lo)};
}

std::shared_ptr<const ClosedForm> odd_even_closed_form(const std::shared_ptr<const ClosedForm>& base,
                                                       double sign) {
  ClosedForm out;
  out.value = [base, sign](Complex z) { return 0.5 * (base->value(z) + sign * base->value(-z)); };
  out.first = [base, sign](Complex z) { return 0.5 * (base->first(z) - sign * base->first(-z)); };
  out.second = [base, sign](Complex z) {
    return 0.5 * (base->second(z) + sign * base->second(-z));
  };
  out.first_bound = base->first_bound;
  out.second_bound = base->second_bound;
  return std::make_shared<const ClosedForm>(std::move(out));
}

AnalyticFunction parity_part(const AnalyticFunction& f, std::size_t parity) {
  std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k % 2 != parity) c[k] = 0.0;
  std::shared_ptr<const ClosedForm> cf;
  if (f.closed_form()) {
    // Share ownership by copying the closed form once.
    auto base = std::make_shared<const ClosedForm>(*f.closed_form());
    cf = odd_even_closed_form(base, parity == 1 ? -1.0 : 1.0);
  }
  const Provenance p =
      f.provenance() == Provenance::Polynomial ? Provenance::Polynomial : Provenance::Composition;
  return AnalyticFunction(std::move(c), f.eval_radius(), p, f.tail_bound(), std::move(cf));
}

}  // namespace

Complex evaluate(const AnalyticFunction& f, Complex z) {
  check_domain(f, z);
  const auto c = f.coefficients();
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

Complex derivative_at(const AnalyticFunction& f, Complex z) {
  check_domain(f, z);
  const auto c = f.coefficients();
  if (c.size() < 2) return 0.0;
  Complex acc = static_cast<double>(c.size() - 1) * c.back();
  for (std::size_t k = c.size() - 1; k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

Complex second_derivative_at(const AnalyticFunction& f, Complex z) {
  check_domain(f, z);
  const auto c = f.coefficients();
  if (c.size() < 3) return 0.0;
  auto weight = [](std::size_t k) { return static_cast<double>(k) * static_cast<double>(k - 1); };
  Complex acc = weight(c.size() - 1) * c.back();
  for (std::size_t k = c.size() - 1; k-- > 2;) acc = acc * z + weight(k) * c[k];
  return acc;
}

AnalyticFunction odd_part(const AnalyticFunction& f) { return parity_part(f, 1); }

AnalyticFunction even_part(const AnalyticFunction& f) { return parity_part(f, 0); }

AnalyticFunction compose_moebius(const AnalyticFunction& f, const MoebiusMap& T, std::size_t order) {
  if (order < 1) throw ArgumentError("compose_moebius: order must be >= 1");
  const double x = std::abs(T.xi());
  const double reach = (f.eval_radius() - std::abs(T.shift())) / std::abs(T.scale());
  if (reach <= x)
    throw DomainError("compose_moebius: T(0) lies outside the certified radius of f");
  double rho = kBoundaryCap;
  if (reach < 1.0) rho = std::min(rho, (reach - x) / (1.0 - x * reach));
  auto sampler = [&](Complex z) { return evaluate(f, T(z)); };
  SampledSeries s = series_from_sampler(sampler, rho, order);
  return AnalyticFunction(std::move(s.coefficients), s.eval_radius, Provenance::Composition,
                          s.tail + f.tail_bound());
}

AnalyticFunction make_moebius(const MoebiusMap& T) {
  const Truncation t = choose_truncation([&](std::size_t k, double r) { return T.tail(k, r); });
  return AnalyticFunction(T.taylor(t.order), t.radius, Provenance::Moebius, t.tail,
                          std::make_shared<const ClosedForm>(T.closed_form()));
}

AnalyticFunction make_extremal_lft(Complex a, Complex b, Complex c) {
  if (b == Complex{}) throw ArgumentError("extremal-lft: b must be nonzero");
  if (!(std::abs(b) < 1.0)) throw ArgumentError("extremal-lft: |b| must be < 1");
  if (std::abs(std::abs(c) - 1.0) > 1e-14) throw ArgumentError("extremal-lft: |c| must be 1");
  const MoebiusMap T(b, c, 1.0, a);
  const Truncation t = choose_truncation([&](std::size_t k, double r) { return T.tail(k, r); });
  return AnalyticFunction(T.taylor(t.order), t.radius, Provenance::ExtremalLft, t.tail,
                          std::make_shared<const ClosedForm>(T.closed_form()));
}

AnalyticFunction make_schur_extremal(Complex a, Complex b) {
  const double t = std::abs(a);
  if (t == 0.0) throw ArgumentError("schur-extremal: a must be nonzero");
  if (t > 1.0 + 1e-14) throw ArgumentError("schur-extremal: |a| must be <= 1");
  const Complex u = a / t;
  if (t >= 1.0 - 1e-14) {
    ClosedForm cf;
    cf.value = [u, b](Complex z) { return u * z + b; };
    cf.first = [u](Complex) { return u; };
    cf.second = [](Complex) { return Complex{}; };
    cf.first_bound = [](double) { return 1.0; };
    cf.second_bound = [](double) { return 0.0; };
    return AnalyticFunction({b, u}, 1.0, Provenance::SchurExtremal, 0.0,
                            std::make_shared<const ClosedForm>(std::move(cf)));
  }
  const double gain = 1.0 - t * t;
  auto tail = [=](std::size_t k, double r) {
    return gain * std::pow(t, static_cast<double>(k) - 1.0) *
           std::pow(r, static_cast<double>(k + 1)) / (1.0 - t * r);
  };
  const Truncation tr = choose_truncation(tail);
  std::vector<Complex> c(tr.order + 1);
  c[0] = b;
  c[1] = a;
  double power = 1.0;  // (-t)^(k-2)
  for (std::size_t k = 2; k <= tr.order; ++k) {
    c[k] = u * power * gain;
    power *= -t;
  }

  // f = u z m(z) + b with m(z) = (z + t) / (1 + t z).
  ClosedForm cf;
  cf.value = [=](Complex z) { return u * z * (z + t) / (1.0 + t * z) + b; };
  cf.first = [=](Complex z) {
    const Complex den = 1.0 + t * z;
    return u * ((z + t) / den + z * gain / (den * den));
  };
  cf.second = [=](Complex z) {
    const Complex den = 1.0 + t * z;
    return u * (2.0 * gain / (den * den) - z * 2.0 * t * gain / (den * den * den));
  };
  cf.first_bound = [=](double r) { return 1.0 + r * gain / ((1.0 - t * r) * (1.0 - t * r)); };
  cf.second_bound = [=](double r) {
    const double d = 1.0 - t * r;
    return 2.0 * gain / (d * d) + r * 2.0 * t * gain / (d * d * d);
  };
  return AnalyticFunction(std::move(c), tr.radius, Provenance::SchurExtremal, tr.tail,
                          std::make_shared<const ClosedForm>(std::move(cf)));
}

double series_sup_bound(const AnalyticFunction& f, double r, int order) {
  if (order < 0 || order > 2) throw ArgumentError("series_sup_bound: order must be 0, 1 or 2");
  const auto c = f.coefficients();
  double acc = 0.0;
  for (std::size_t k = static_cast<std::size_t>(order); k < c.size(); ++k) {
    double w = 1.0;
    for (int j = 0; j < order; ++j) w *= static_cast<double>(k - static_cast<std::size_t>(j));
    acc += w * std::abs(c[k]) * std::pow(r, static_cast<double>(k) - order);
  }
  return acc;
}

double evaluation_error_bound(const AnalyticFunction& f, double r) {
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  return 4.0 * static_cast<double>(f.coefficients().size()) * u * series_sup_bound(f, r, 0);
}

CircleMax max_modulus_on_circle(const AnalyticFunction& f, double r, std::size_t samples) {
  if (samples < 8) throw ArgumentError("max_modulus_on_circle: need at least 8 samples");
  const double h = 2.0 * std::numbers::pi / static_cast<double>(samples);
  std::vector<double> v(samples);
  for (std::size_t j = 0; j < samples; ++j)
    v[j] = std::norm(evaluate(f, std::polar(r, h * static_cast<double>(j))));
  const double sampled_best = *std::max_element(v.begin(), v.end());

  // phi(theta) = |F|^2 with F(theta) = f(r e^{i theta}); a peak of phi can
  // sample at most sup|phi''| h^2 / 8 below its top, so every local maximum
  // within that margin of the best sample may hold the true maximum.
  const double m0 = series_sup_bound(f, r, 0);
  const double m1 = r * series_sup_bound(f, r, 1);
  const double m2 = m1 + r * r * series_sup_bound(f, r, 2);
  const double margin = (2.0 * m1 * m1 + 2.0 * m0 * m2) * h * h / 8.0;
  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < samples; ++j) {
    const double prev = v[(j + samples - 1) % samples];
    const double next = v[(j + 1) % samples];
    if (v[j] >= prev && v[j] >= next && v[j] >= sampled_best - margin) peaks.push_back(j);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (peaks.size() > 32) peaks.resize(32);

  double best = -1.0;
  double best_angle = 0.0;
  for (std::size_t j : peaks) {
    double val = v[j];
    double angle = h * static_cast<double>(j);
    for (int it = 0; it < 4 && r > 0.0; ++it) {
      const Complex z = std::polar(r, angle);
      const Complex F = evaluate(f, z);
      const Complex fp = derivative_at(f, z);
      const Complex F1 = Complex(0.0, 1.0) * z * fp;
      const Complex F2 = -z * fp - z * z * second_derivative_at(f, z);
      const double d1 = 2.0 * std::real(std::conj(F) * F1);
      const double d2 = 2.0 * std::norm(F1) + 2.0 * std::real(std::conj(F) * F2);
      if (!(d2 < 0.0)) break;
      const double step = std::clamp(-d1 / d2, -h, h);
      const double trial = angle + step;
      const double tv = std::norm(evaluate(f, std::polar(r, trial)));
      if (!(tv > val)) break;
      val = tv;
      angle = trial;
    }
    if (val > best) {
      best = val;
      best_angle = angle;
    }
  }
  best_angle = std::remainder(best_angle, 2.0 * std::numbers::pi);
  if (best_angle < 0.0) best_angle += 2.0 * std::numbers::pi;
  return {std::sqrt(std::max(best, 0.0)), best_angle, std::polar(r, best_angle)};
}

AnalyticFunction linearization_residual(const AnalyticFunction& f) {
  std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
  c[0] = 0.0;
  if (c.size() > 1) c[1] = 0.0;
  std::shared_ptr<const ClosedForm> cf;
  if (f.closed_form()) {
    auto base = std::make_shared<const ClosedForm>(*f.closed_form());
    const Complex v0 = base->value(0.0);
    const Complex d0 = base->first(0.0);
    ClosedForm out;
    out.value = [base, v0, d0](Complex z) { return base->value(z) - v0 - d0 * z; };
    out.first = [base, d0](Complex z) { return base->first(z) - d0; };
    out.second = base->second;
    const double m = std::abs(d0);
    out.first_bound = [base, m](double r) { return base->first_bound(r) + m; };
    out.second_bound = base->second_bound;
    cf = std::make_shared<const ClosedForm>(std::move(out));
  }
  return AnalyticFunction(std::move(c), f.eval_radius(), f.provenance(), f.tail_bound(),
                          std::move(cf));
}

double boundary_radius(const AnalyticFunction& f) {
  return f.eval_radius() >= 1.0 ? 1.0 : std::min(f.eval_radius(), kBoundaryCap);
}

GrowthNormalization normalize_for_growth(const AnalyticFunction& f, Complex d) {
  const double m = std::abs(d);
  if (m == 0.0) throw ArgumentError("normalize_for_growth: d must be nonzero");
  if (!(m < 1.0)) throw DomainError("normalize_for_growth: d must lie in the unit disk");
  const Complex fd = evaluate(f, d);
  const Complex f0 = evaluate(f, 0.0);
  if (std::abs(fd - f0) <= 1e-14 * std::max(1.0, std::abs(f0)))
    throw ArgumentError("normalize_for_growth: f(d) must differ from f(0)");
  const double x = m / (1.0 + std::sqrt(1.0 - m * m));
  const MoebiusMap T(-x, d / m);
  const Complex c1 = 2.0 * x / (fd - f0);
  const Complex c2 = -x * (fd + f0) / (fd - f0);
  AnalyticFunction g = compose_moebius(f, T).affine(c1, c2);
  return GrowthNormalization{d, x, T, c1, c2, std::move(g)};
}

}  // namespace diskdiam
