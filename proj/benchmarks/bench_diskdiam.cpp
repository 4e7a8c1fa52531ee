#include <benchmark/benchmark.h>

#include <random>

#include "diskdiam/bounds.hpp"
#include "diskdiam/families.hpp"
#include "diskdiam/hyperbolic.hpp"
#include "diskdiam/planar.hpp"

using namespace diskdiam;

namespace {

AnalyticFunction sample_polynomial(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_polynomial(rng);
}

void BM_FarthestPair(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<Complex> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) p = {g(rng), g(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(farthest_pair(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FarthestPair)->RangeMultiplier(4)->Range(256, 1 << 16)->Complexity();

void BM_CoefficientsFromCircle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = std::polar(1.0, 0.37 * static_cast<double>(j));
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_from_circle(s, 0.9));
}
BENCHMARK(BM_CoefficientsFromCircle)->RangeMultiplier(4)->Range(64, 1 << 14);

void BM_ImageCircleDiameter(benchmark::State& state) {
  const AnalyticFunction f = sample_polynomial(2);
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(image_circle_diameter(f, 0.9, tol));
}
BENCHMARK(BM_ImageCircleDiameter)->DenseRange(4, 10, 2);

void BM_CertifiedDiskDiameterMoebius(benchmark::State& state) {
  const AnalyticFunction f = make_extremal_lft(0.0, 0.75, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(certified_disk_diameter(f));
}
BENCHMARK(BM_CertifiedDiskDiameterMoebius);

void BM_ComposeMoebius(benchmark::State& state) {
  const AnalyticFunction f = sample_polynomial(3);
  const MoebiusMap T(Complex(0.3, 0.2), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(compose_moebius(f, T));
}
BENCHMARK(BM_ComposeMoebius);

void BM_LandauToeplitz(benchmark::State& state) {
  const AnalyticFunction f = normalize_diameter(sample_polynomial(4));
  for (auto _ : state) benchmark::DoNotOptimize(landau_toeplitz(f));
}
BENCHMARK(BM_LandauToeplitz);

void BM_MinDensity(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const DomainMap dom(normalize_diameter(random_univalent_polynomial(rng)));
  for (auto _ : state)
    benchmark::DoNotOptimize(min_density(dom, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MinDensity)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
