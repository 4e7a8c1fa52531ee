#include "diskdiam/planar.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace diskdiam {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

std::vector<std::size_t> convex_hull(std::span<const Complex> points) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Complex p = points[a], q = points[b];
    if (p.real() != q.real()) return p.real() < q.real();
    if (p.imag() != q.imag()) return p.imag() < q.imag();
    return a < b;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;

  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t id : idx) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[id]) <= 0.0) --k;
    hull[k++] = id;
  }
  const std::size_t lower = k + 1;
  for (std::size_t t = idx.size() - 1; t-- > 0;) {
    const std::size_t id = idx[t];
    while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[id]) <= 0.0) --k;
    hull[k++] = id;
  }
  hull.resize(k - 1);
  return hull;
}

FarthestPair farthest_pair(std::span<const Complex> points) {
  FarthestPair best;
  if (points.empty()) return best;
  const std::vector<std::size_t> hull = convex_hull(points);
  const std::size_t m = hull.size();

  auto consider = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const double d = std::abs(points[a] - points[b]);
    if (d > best.distance || (d == best.distance && std::pair(a, b) < std::pair(best.i, best.j))) {
      best = {a, b, d};
    }
  };

  if (m == 1) {
    best = {hull[0], hull[0], 0.0};
    return best;
  }
  best = {std::min(hull[0], hull[1]), std::max(hull[0], hull[1]),
          std::abs(points[hull[0]] - points[hull[1]])};
  if (m == 2) return best;

  // Every antipodal pair is visited as the caliper turns through the hull.
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t i2 = (i + 1) % m;
    const Complex a = points[hull[i]], b = points[hull[i2]];
    while (std::abs(cross(a, b, points[hull[(j + 1) % m]])) > std::abs(cross(a, b, points[hull[j]])))
      j = (j + 1) % m;
    consider(hull[i], hull[j]);
    consider(hull[i2], hull[j]);
    // Parallel edges: the next vertex is antipodal too.
    if (std::abs(cross(a, b, points[hull[(j + 1) % m]])) == std::abs(cross(a, b, points[hull[j]]))) {
      consider(hull[i], hull[(j + 1) % m]);
      consider(hull[i2], hull[(j + 1) % m]);
    }
  }
  return best;
}

}  // namespace diskdiam
