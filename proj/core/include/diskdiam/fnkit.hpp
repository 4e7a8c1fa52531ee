#pragma once

// Analytic functions on the unit disk, stored as truncated power series
// about the origin together with the radius up to which the truncation is
// certified.

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace diskdiam {

using Complex = std::complex<double>;

/// Truncation error budget applied by every constructor.
inline constexpr double kTailBudget = 1e-12;
/// Evaluations that approach the unit circle stop here unless a series is
/// certified on the closed disk.
inline constexpr double kBoundaryCap = 0.999;
inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 15;

enum class Provenance { Polynomial, Moebius, Composition, ExtremalLft, SchurExtremal };

std::string_view to_string(Provenance p);

/// Exact form of a function kept next to its series so that rational
/// evaluation can be compared with series evaluation.
struct ClosedForm {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> first;
  std::function<Complex(Complex)> second;
  /// sup over |z| <= r of |f'| and |f''|, valid for 0 <= r <= 1.
  std::function<double(double)> first_bound;
  std::function<double(double)> second_bound;
};

/// z -> scale * eta * (z - xi) / (1 - conj(xi) z) + shift.
class MoebiusMap {
 public:
  MoebiusMap(Complex xi, Complex eta, Complex scale = 1.0, Complex shift = 0.0);

  static MoebiusMap identity() { return MoebiusMap(0.0, 1.0); }

  Complex xi() const { return xi_; }
  Complex eta() const { return eta_; }
  Complex scale() const { return scale_; }
  Complex shift() const { return shift_; }
  bool is_automorphism() const;

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  Complex second_derivative(Complex z) const;

  /// Inverse of the disk automorphism part; requires scale 1 and shift 0.
  MoebiusMap inverse() const;

  /// Taylor coefficients c_0..c_order.
  std::vector<Complex> taylor(std::size_t order) const;
  /// sum_{k>order} |c_k| r^k.
  double tail(std::size_t order, double r) const;
  /// Upper bound of |T(z)| over |z| <= r.
  double max_modulus(double r) const;

  ClosedForm closed_form() const;

 private:
  Complex xi_;
  Complex eta_;
  Complex scale_;
  Complex shift_;
};

class AnalyticFunction {
 public:
  /// `tail_bound` bounds |f - series| on |z| <= eval_radius.
  AnalyticFunction(std::vector<Complex> coefficients, double eval_radius = 1.0,
                   Provenance provenance = Provenance::Polynomial, double tail_bound = 0.0,
                   std::shared_ptr<const ClosedForm> closed_form = nullptr);

  static AnalyticFunction polynomial(std::vector<Complex> coefficients);
  static AnalyticFunction identity();
  static AnalyticFunction constant(Complex value);
  static AnalyticFunction monomial(std::size_t degree, Complex coefficient = 1.0);

  std::span<const Complex> coefficients() const { return coefficients_; }
  /// c_k, zero past the truncation order.
  Complex coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Complex{};
  }
  std::size_t order() const { return coefficients_.size() - 1; }
  double eval_radius() const { return eval_radius_; }
  double tail_bound() const { return tail_bound_; }
  Provenance provenance() const { return provenance_; }
  const ClosedForm* closed_form() const { return closed_form_.get(); }

  /// lambda * f + shift; the closed form, if any, follows along.
  AnalyticFunction affine(Complex lambda, Complex shift = 0.0) const;
  /// Same closed form and radius, different series.
  AnalyticFunction with_coefficients(std::vector<Complex> coefficients) const;

 private:
  std::vector<Complex> coefficients_;
  double eval_radius_;
  Provenance provenance_;
  double tail_bound_;
  std::shared_ptr<const ClosedForm> closed_form_;
};

Complex evaluate(const AnalyticFunction& f, Complex z);
Complex derivative_at(const AnalyticFunction& f, Complex z);
Complex second_derivative_at(const AnalyticFunction& f, Complex z);

/// Coefficients c_k for odd k.
AnalyticFunction odd_part(const AnalyticFunction& f);
AnalyticFunction even_part(const AnalyticFunction& f);

/// Series of f∘T recovered from circle samples of the composite. The result is
/// certified (tail <= kTailBudget) on its eval_radius; `order` is a lower bound
/// on the truncation order and is raised if the tail demands it.
AnalyticFunction compose_moebius(const AnalyticFunction& f, const MoebiusMap& T,
                                 std::size_t order = kDefaultOrder);

/// Taylor coefficients from N equispaced samples on |z| = r, N a power of two.
std::vector<Complex> coefficients_from_circle(std::span<const Complex> samples, double r);

struct SampledSeries {
  std::vector<Complex> coefficients;
  double eval_radius = 0.0;
  double tail = 0.0;
};

/// Truncated series of a function analytic on a neighbourhood of |z| <= rho,
/// known only through point values. The sampling density is chosen so the
/// aliased remainder is negligible, and the order (at least `min_order`) so
/// that the estimated tail at the returned radius stays under kTailBudget.
SampledSeries series_from_sampler(const std::function<Complex(Complex)>& F, double rho,
                                  std::size_t min_order);

/// c (z - b) / (1 - conj(b) z) + a with |c| = 1 and 0 < |b| < 1.
AnalyticFunction make_extremal_lft(Complex a, Complex b, Complex c);
/// z (a/|a|) (z + |a|) / (1 + |a| z) + b with 0 < |a| <= 1.
AnalyticFunction make_schur_extremal(Complex a, Complex b);
/// Series of an arbitrary Möbius map.
AnalyticFunction make_moebius(const MoebiusMap& T);

/// Bound of sup over |z| <= r of |f^(order)| (order 0, 1 or 2) from the
/// coefficient moduli of the series.
double series_sup_bound(const AnalyticFunction& f, double r, int order);

/// Upper bound on the rounding error of one Horner evaluation at |z| <= r.
double evaluation_error_bound(const AnalyticFunction& f, double r);

struct CircleMax {
  double value = 0.0;
  double angle = 0.0;
  Complex point{};
};

/// max over |z| = r of |f(z)|: uniform scan followed by Newton polishing of
/// every sampled peak that could still hold the maximum. By the maximum modulus principle this is also the
/// maximum over the closed disk.
CircleMax max_modulus_on_circle(const AnalyticFunction& f, double r, std::size_t samples = 1024);

/// f - f(0) - f'(0) z as a series.
AnalyticFunction linearization_residual(const AnalyticFunction& f);

/// Largest radius at which f may be evaluated near the unit circle: 1 when
/// the series is certified on the closed disk, the boundary cap otherwise.
double boundary_radius(const AnalyticFunction& f);

/// Normalization used in the diameter growth bound: for d with f(d) != f(0),
/// T maps the disk onto itself with T(x) = d, T(-x) = 0, and
/// g = c1 f∘T + c2 satisfies g(x) = x, g(-x) = -x.
struct GrowthNormalization {
  Complex d;
  double x;
  MoebiusMap T;
  Complex c1;
  Complex c2;
  AnalyticFunction g;
};

GrowthNormalization normalize_for_growth(const AnalyticFunction& f, Complex d);

}  // namespace diskdiam
