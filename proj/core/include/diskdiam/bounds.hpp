#pragma once

// Verifiers for the diameter versions of Schwarz's Lemma: derivative and
// growth bounds, coefficient bounds, the Schur linearization bound and the
// boundary fixed-point lemma. Each returns a BoundReport (or a richer record
// embedding one).

#include <optional>
#include <vector>

#include "diskdiam/diameter.hpp"
#include "diskdiam/fnkit.hpp"
#include "diskdiam/report.hpp"

namespace diskdiam {

struct Tolerances {
  double numeric = 1e-9;
  double equality = 1e-9;
  double rigidity = 1e-6;
  /// Allowed excess of Diam f(D) over 2 where a verifier needs Diam <= 2.
  double diam_excess = 1e-6;
  /// Target width of the Diam f(D) enclosure.
  double diameter_width = 1e-6;
  /// Relative agreement of the two sides of the Parseval identity.
  double quadrature = 1e-8;
  std::size_t quadrature_points = 4096;
  std::size_t scan_points = 1024;
};

/// Enclosure of Diam f(D). `lower` is an attained distance and serves as the
/// best estimate; verifiers widen their numeric tolerance by the enclosure
/// width.
struct DiskDiameter {
  double lower = 0.0;
  double upper = 0.0;
  /// Added to the last circle's upper end when the series is not certified on
  /// the closed disk.
  double allowance = 0.0;
  /// "closed-form" or "series".
  std::string source;
  /// D_r along the approach radii 0.9, 0.99, 0.999 (those within reach).
  std::vector<DiameterEstimate> approach;
  DiameterEstimate boundary;
  bool monotone = true;

  double best() const { return lower; }
  double width() const { return upper - lower; }
};

DiskDiameter certified_disk_diameter(const AnalyticFunction& f, double width = 1e-6);

struct SupDeviation {
  double best = 0.0;   ///< polished maximum of |f - f(0)| on the boundary circle
  double upper = 0.0;  ///< with the sampling error added
  Complex point{};
};

/// sup over the disk of |f(z) - f(0)|, scanned on boundary_radius(f).
SupDeviation sup_deviation(const AnalyticFunction& f, std::size_t samples = 1024);

/// |f(z) - f(0)| <= |z| sup|f - f(0)|.
BoundReport schwarz_growth(const AnalyticFunction& f, Complex z, double sup_bound,
                           const Tolerances& tol = {});
/// |f'(0)| <= sup|f - f(0)|.
BoundReport schwarz_derivative(const AnalyticFunction& f, double sup_bound,
                               const Tolerances& tol = {});

/// |f'(0)| <= 1 for f normalized to Diam f(D) = 2; on equality, checks that
/// the normalized series is linear.
BoundReport landau_toeplitz(const AnalyticFunction& f, const Tolerances& tol = {});
BoundReport landau_toeplitz(const AnalyticFunction& f, const DiskDiameter& diam,
                            const Tolerances& tol = {});

/// |f(z) - f(0)| <= |z| * 2 / (1 + sqrt(1 - |z|^2)) * Diam / 2, Diam <= 2.
BoundReport growth_bound(const AnalyticFunction& f, Complex z, const Tolerances& tol = {});
BoundReport growth_bound(const AnalyticFunction& f, Complex z, const DiskDiameter& diam,
                         const Tolerances& tol = {});

/// |f(z) - f(w)| / Diam <= |z - w| / (|1 - conj(w) z| + sqrt((1-|z|^2)(1-|w|^2))).
BoundReport growth_bound_symmetric(const AnalyticFunction& f, Complex z, Complex w,
                                   const Tolerances& tol = {});
BoundReport growth_bound_symmetric(const AnalyticFunction& f, Complex z, Complex w,
                                   const DiskDiameter& diam, const Tolerances& tol = {});

struct PoukkaReport {
  std::size_t n = 0;
  Complex c_n{};
  double diam = 0.0;
  double parseval_lhs = 0.0;   ///< sum |c_k|^2 |1 - e^{i pi k/n}|^2 r^{2k}
  double integral_rhs = 0.0;   ///< trapezoid mean of |f(z) - f(z e^{i pi/n})|^2 on |z| = r
  std::vector<Complex> h_coeffs;
  BoundReport report;
};

/// 2|c_n| <= Diam f(D), plus the Parseval identity behind it at radius r.
PoukkaReport poukka(const AnalyticFunction& f, std::size_t n, double r, const Tolerances& tol = {});
PoukkaReport poukka(const AnalyticFunction& f, std::size_t n, double r, const DiskDiameter& diam,
                    const Tolerances& tol = {});

struct SchurDecomposition {
  Complex a{};
  /// (f(z) - f(0)) / z.
  AnalyticFunction g;
  /// (g - a) / (1 - conj(a) g) = z h; absent when |a| = 1.
  std::optional<AnalyticFunction> h;
  /// One report per radius: max |f - f(0) - a z| on |z| = r against
  /// (1 - |a|^2) r^2 / (1 - |a| r).
  std::vector<BoundReport> residuals;
  /// max |f - (f(0) + z (a + z h) / (1 + conj(a) z h))| at sampled points.
  double reconstruction_error = 0.0;
};

/// Requires sup|f - f(0)| <= 1 (caller normalizes) and |a| <= 1.
SchurDecomposition schur_decompose(const AnalyticFunction& f, const std::vector<double>& radii,
                                   const Tolerances& tol = {});

/// For g with g(w) = w and max_{|z|=|w|} |g| = |w| attained at w, Im g'(w) = 0.
/// Hypotheses are checked to `hypothesis_tol`; if they fail the report says
/// hypothesis-not-met rather than fail.
BoundReport fixed_point_lemma_check(const AnalyticFunction& g, Complex w, double hypothesis_tol);

/// g_w(z) = (f(z) - f(-w)) / (2 f'(0)).
AnalyticFunction make_fixed_point_witness(const AnalyticFunction& f, Complex w);

}  // namespace diskdiam
