#include "diskdiam/families.hpp"

#include "diskdiam/bounds.hpp"
#include "diskdiam/errors.hpp"

namespace diskdiam {

AnalyticFunction random_polynomial(std::mt19937_64& rng, std::size_t max_degree) {
  if (max_degree < 1) throw ArgumentError("random_polynomial: max_degree must be positive");
  std::uniform_int_distribution<std::size_t> degree(1, max_degree);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = degree(rng);
  std::vector<Complex> c(n + 1);
  for (auto& x : c) {
    const double re = unit(rng);
    x = {re, unit(rng)};
  }
  return AnalyticFunction::polynomial(std::move(c));
}

std::vector<AnalyticFunction> random_polynomials(std::uint64_t seed, std::size_t count,
                                                 std::size_t max_degree) {
  std::mt19937_64 rng(seed);
  std::vector<AnalyticFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_polynomial(rng, max_degree));
  return out;
}

AnalyticFunction random_univalent_polynomial(std::mt19937_64& rng, std::size_t max_degree) {
  if (max_degree < 2) throw ArgumentError("random_univalent_polynomial: max_degree must be >= 2");
  std::uniform_int_distribution<std::size_t> degree(2, max_degree);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = degree(rng);
  std::vector<Complex> c(n + 1);
  c[1] = 1.0;
  double weight = 0.0;
  for (std::size_t k = 2; k <= n; ++k) {
    const double re = unit(rng) - 0.5;
    c[k] = {re, unit(rng) - 0.5};
    weight += static_cast<double>(k) * std::abs(c[k]);
  }
  const double budget = 0.9 * unit(rng);
  if (weight > 0.0)
    for (std::size_t k = 2; k <= n; ++k) c[k] *= budget / weight;
  return AnalyticFunction::polynomial(std::move(c));
}

AnalyticFunction normalize_diameter(const AnalyticFunction& f, double target, double width) {
  const DiskDiameter d = certified_disk_diameter(f, width);
  if (!(d.lower > 0.0)) throw DegenerateInput("normalize_diameter: Diam f(D) is zero");
  return f.affine(target / d.lower);
}

}  // namespace diskdiam
