#pragma once

// Seeded test families.

#include <cstdint>
#include <random>
#include <vector>

#include "diskdiam/fnkit.hpp"

namespace diskdiam {

/// Degree uniform in [1, max_degree], coefficients uniform in [0,1] x [0,1].
AnalyticFunction random_polynomial(std::mt19937_64& rng, std::size_t max_degree = 8);
std::vector<AnalyticFunction> random_polynomials(std::uint64_t seed, std::size_t count,
                                                 std::size_t max_degree = 8);

/// z + sum_{k>=2} a_k z^k with sum k |a_k| <= 0.9, so Re f' > 0 on the disk
/// and f is univalent.
AnalyticFunction random_univalent_polynomial(std::mt19937_64& rng, std::size_t max_degree = 8);

/// (target / Diam f(D)) f, with Diam taken from the certified enclosure.
AnalyticFunction normalize_diameter(const AnalyticFunction& f, double target = 2.0,
                                    double width = 1e-6);

}  // namespace diskdiam
