#pragma once

// Certified diameters of image circles f(rT) and the ratio curve D_r / r.
//
// The lower end of an enclosure is a distance actually attained by two image
// points on |z| = r (after Newton polishing of the best sampled pair). The
// upper end bounds the sampling error: at the true maximizing pair the
// squared distance psi(alpha, beta) = |F(alpha) - F(beta)|^2 is stationary, so
// a grid of spacing h misses at most L h^2 / 4 of psi, where L bounds the
// Hessian of psi through sup |f'| and sup |f''| on the disk of radius r.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "diskdiam/fnkit.hpp"
#include "diskdiam/report.hpp"

namespace diskdiam {

struct DiameterEstimate {
  double r = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// Points z0, w0 on r T with |f(z0) - f(w0)| = lower.
  std::array<Complex, 2> witness{};
  std::size_t samples_used = 0;

  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, DiameterEstimate best)
      : std::runtime_error(what), best_(best) {}
  const DiameterEstimate& best() const { return best_; }

 private:
  DiameterEstimate best_;
};

struct DiameterOptions {
  std::size_t initial_samples = 256;
  std::size_t max_samples = std::size_t{1} << 22;
  bool polish = true;
};

/// Enclosure of Diam f(rT) = Diam f(rD) for 0 < r <= eval_radius, refined
/// until upper - lower <= tol.
DiameterEstimate image_circle_diameter(const AnalyticFunction& f, double r, double tol,
                                       const DiameterOptions& options = {});

/// Same engine driven by the closed form of f (required), valid up to r = 1.
DiameterEstimate closed_form_circle_diameter(const AnalyticFunction& f, double r, double tol,
                                             const DiameterOptions& options = {});

/// Interior pairs of the closed disk r D never beat the boundary diameter.
BoundReport boundary_attainment_check(const AnalyticFunction& f, double r,
                                      std::size_t interior_samples, std::uint64_t seed = 0,
                                      double tol = 1e-9);

struct RatioPoint {
  double r = 0.0;
  double lower = 0.0;  ///< lower end of D_r / r
  double upper = 0.0;
  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
};

struct RatioCurve {
  std::vector<double> grid;
  std::vector<RatioPoint> ratios;
  /// Index i such that the step from grid[i] to grid[i+1] decreases by more
  /// than the two enclosure widths combined.
  std::vector<std::size_t> violations;
  /// Decreasing steps still covered by the enclosure widths.
  std::vector<std::size_t> near_ties;

  bool nondecreasing() const { return violations.empty(); }
};

/// 17 radii equispaced on [0.05, 0.95].
std::vector<double> default_ratio_grid();

/// Enclosures of D_r / r on an increasing grid; `tol` applies to the ratio.
RatioCurve ratio_curve(const AnalyticFunction& f, const std::vector<double>& grid, double tol);

/// Decides whether D_r / r is constant on the curve and whether the series is
/// linear, and passes iff both verdicts agree.
BoundReport linearity_probe(const RatioCurve& curve, const AnalyticFunction& f, double tol = 1e-6);

}  // namespace diskdiam
