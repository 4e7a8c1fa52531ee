#pragma once

// Finite planar point sets: convex hull and farthest pair.

#include <cstddef>
#include <span>
#include <vector>

#include "diskdiam/fnkit.hpp"

namespace diskdiam {

/// Indices of the convex hull vertices in counter-clockwise order (Andrew's
/// monotone chain). Among coincident points the smallest index is kept;
/// collinear boundary points are dropped.
std::vector<std::size_t> convex_hull(std::span<const Complex> points);

struct FarthestPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
};

/// Diameter of a finite point set via hull + rotating calipers. Ties are
/// resolved to the lexicographically smallest (i, j) with i <= j.
FarthestPair farthest_pair(std::span<const Complex> points);

}  // namespace diskdiam
