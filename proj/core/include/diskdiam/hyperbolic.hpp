#pragma once

// Hyperbolic density of a simply connected domain given as the image of a
// conformal map of the disk: rho(f(z)) = 1 / ((1 - |z|^2) |f'(z)|).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diskdiam/fnkit.hpp"
#include "diskdiam/report.hpp"

namespace diskdiam {

/// f is univalent by caller contract. Construction spot-checks random pairs
/// for collisions and random points for vanishing derivative, throwing
/// UnivalenceViolation on a hit.
class DomainMap {
 public:
  explicit DomainMap(AnalyticFunction f, std::string label = {}, std::uint64_t seed = 0,
                     std::size_t pairs = 1000);

  const AnalyticFunction& f() const { return f_; }
  const std::string& label() const { return label_; }

 private:
  AnalyticFunction f_;
  std::string label_;
};

double density_at(const DomainMap& dom, Complex z);

struct DensitySample {
  Complex z;
  Complex w;
  double rho = 0.0;
};

struct DensityProfile {
  std::vector<DensitySample> points;
  double Lambda = 0.0;
  /// f(argmin).
  Complex tau{};
  Complex argmin{};
  /// max |f(z) - tau| over |z| = proxy_radius; a lower estimate of the sup
  /// over the domain unless proxy_radius is 1.
  double R_h = 0.0;
  double proxy_radius = 0.0;
  /// Lambda >= 2 / Diam f(D), checked against the certified diameter.
  BoundReport corollary;
};

/// Polar grid (grid_resolution radii up to 0.995, twice as many angles) then
/// cyclic golden-section refinement in x and y around the best sample.
DensityProfile min_density(const DomainMap& dom, std::size_t grid_resolution = 64,
                           double tol = 1e-6);

/// For inner = outer ∘ embed with embed mapping the disk into itself, checks
/// rho_inner(f_inner(z)) >= rho_outer(f_outer(embed(z))) on a polar grid.
BoundReport monotonicity_check(const DomainMap& inner, const DomainMap& outer,
                               const AnalyticFunction& embed, std::size_t grid = 16,
                               double tol = 1e-9);

}  // namespace diskdiam
