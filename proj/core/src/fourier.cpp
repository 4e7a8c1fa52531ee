#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>

#include "diskdiam/errors.hpp"
#include "diskdiam/fnkit.hpp"

namespace diskdiam {

namespace {

// The FFTW planner is not reentrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Complex> forward_dft(std::span<const Complex> in) {
  const int n = static_cast<int>(in.size());
  std::vector<Complex> src(in.begin(), in.end());
  std::vector<Complex> out(in.size());
  auto* src_ptr = reinterpret_cast<fftw_complex*>(src.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, src_ptr, out_ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::size_t next_pow2(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(n, 1)); }

}  // namespace

std::vector<Complex> coefficients_from_circle(std::span<const Complex> samples, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("coefficients_from_circle: r must lie in (0,1)");
  const std::size_t n = samples.size();
  if (n == 0 || !std::has_single_bit(n))
    throw ArgumentError("coefficients_from_circle: sample count must be a power of two");

  std::vector<Complex> c = forward_dft(samples);
  const double inv_n = 1.0 / static_cast<double>(n);
  double scale = inv_n;
  for (std::size_t k = 0; k < n; ++k) {
    c[k] *= scale;
    scale /= r;
  }
  return c;
}

SampledSeries series_from_sampler(const std::function<Complex(Complex)>& F, double rho,
                                  std::size_t min_order) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("series_from_sampler: rho must lie in (0,1)");
  min_order = std::max<std::size_t>(min_order, 1);
  constexpr std::size_t kMaxSamples = std::size_t{1} << 17;
  constexpr double kCertifyFraction = 0.99;

  std::size_t n = std::max<std::size_t>(next_pow2(4 * min_order), 256);
  double s = kCertifyFraction * rho;
  double sup = 0.0;

  for (;;) {
    std::vector<Complex> samples(n);
    sup = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      samples[j] = F(std::polar(rho, theta));
      sup = std::max(sup, std::abs(samples[j]));
    }
    // Cauchy bound on everything aliased or lying beyond the sampled band.
    const double q = s / rho;
    const double beyond = sup * std::pow(q, static_cast<double>(n)) / (1.0 - q);
    if (beyond > 0.1 * kTailBudget && n < kMaxSamples) {
      const double needed = std::log(0.1 * kTailBudget * (1.0 - q) / std::max(sup, 1e-300)) /
                            std::log(q);
      n = std::min(kMaxSamples, std::max(2 * n, next_pow2(static_cast<std::size_t>(needed) + 1)));
      continue;
    }

    std::vector<Complex> c = coefficients_from_circle(samples, rho);

    auto tail_at = [&](double radius, std::vector<double>& suffix) {
      // suffix[K] = sum_{K<k<n} |c_k| radius^k
      suffix.assign(n, 0.0);
      double acc = 0.0;
      for (std::size_t k = n - 1; k > 0; --k) {
        suffix[k] = acc;
        acc += std::abs(c[k]) * std::pow(radius, static_cast<double>(k));
      }
      suffix[0] = acc;
      const double qq = radius / rho;
      return sup * std::pow(qq, static_cast<double>(n)) / (1.0 - qq);
    };

    std::vector<double> suffix;
    double remainder = tail_at(s, suffix);
    // Only reachable at the sample cap: give up radius rather than accuracy.
    while (remainder > 0.5 * kTailBudget && s > 0.05 * rho) {
      s *= 0.98;
      remainder = tail_at(s, suffix);
    }
    std::size_t order = min_order;
    while (order < n - 1 && suffix[order] + remainder > kTailBudget) ++order;
    if (4 * order > n && n < kMaxSamples) {
      n *= 2;
      continue;
    }
    c.resize(order + 1);
    return SampledSeries{std::move(c), s, suffix[order] + remainder};
  }
}

}  // namespace diskdiam
