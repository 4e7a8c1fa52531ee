#include <gtest/gtest.h>

#include <random>

#include "diskdiam/errors.hpp"
#include "diskdiam/families.hpp"
#include "diskdiam/fnkit.hpp"
#include "oracles.hpp"

using namespace diskdiam;
using oracle::C;

namespace {

AnalyticFunction moebius_half() { return make_moebius(MoebiusMap(0.5, 1.0)); }

std::vector<C> coeffs(const AnalyticFunction& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

C random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), oracle::kTwoPi * u(rng));
}

}  // namespace

TEST(Evaluate, IdentityAndMonomial) {
  EXPECT_EQ(evaluate(AnalyticFunction::identity(), C(0.3, 0.4)), C(0.3, 0.4));
  EXPECT_DOUBLE_EQ(evaluate(AnalyticFunction::monomial(2), 0.5).real(), 0.25);
}

TEST(Evaluate, TruncatedMoebiusMatchesRationalForm) {
  const AnalyticFunction f = moebius_half();
  EXPECT_GE(f.order(), 60u);
  EXPECT_NEAR(std::abs(evaluate(f, 0.8) - 0.5), 0.0, 1e-12);
}

TEST(Evaluate, OutsideRadiusIsDomainError) {
  const AnalyticFunction f = AnalyticFunction::identity();
  EXPECT_THROW(evaluate(f, 1.5), DomainError);
  EXPECT_THROW(derivative_at(f, C(0.0, 1.01)), DomainError);
}

TEST(Derivative, Examples) {
  EXPECT_DOUBLE_EQ(derivative_at(AnalyticFunction::monomial(2), 0.5).real(), 1.0);
  EXPECT_EQ(derivative_at(AnalyticFunction::identity(), C(0.2, -0.7)), C(1.0));
  EXPECT_NEAR(std::abs(derivative_at(moebius_half(), 0.0) - 0.75), 0.0, 1e-15);
}

TEST(Derivative, AtOriginIsExactlyFirstCoefficient) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const AnalyticFunction p = random_polynomial(rng);
    EXPECT_EQ(derivative_at(p, 0.0), p.coefficient(1));
  }
  const AnalyticFunction lft = make_extremal_lft(C(1, 2), C(0, 0.4), -1.0);
  EXPECT_EQ(derivative_at(lft, 0.0), lft.coefficient(1));
}

TEST(Derivative, AgreesWithCentralDifferences) {
  std::mt19937_64 rng(12);
  const AnalyticFunction lft = make_extremal_lft(0.0, 0.5, 1.0);
  const AnalyticFunction sch = make_schur_extremal(C(0.3, 0.4), 0.2);
  for (const AnalyticFunction* f : {&lft, &sch}) {
    auto F = [f](C z) { return evaluate(*f, z); };
    for (int i = 0; i < 50; ++i) {
      const C z = random_point(rng, 0.8);
      const C fd = oracle::central_difference(F, z, 1e-6);
      const C d = derivative_at(*f, z);
      EXPECT_LE(std::abs(fd - d), 1e-6 * std::max(1.0, std::abs(d)));
    }
  }
}

TEST(OddPart, Examples) {
  const AnalyticFunction f = AnalyticFunction::polynomial({1.0, 1.0, 1.0});
  const AnalyticFunction o = odd_part(f);
  EXPECT_EQ(o.coefficient(0), C(0.0));
  EXPECT_EQ(o.coefficient(1), C(1.0));
  EXPECT_EQ(o.coefficient(2), C(0.0));
  const AnalyticFunction z3 = AnalyticFunction::monomial(3);
  EXPECT_EQ(coeffs(odd_part(z3)), coeffs(z3));
}

TEST(OddPart, MoebiusMatchesSampledSymmetrization) {
  const AnalyticFunction f = moebius_half();
  const AnalyticFunction o = odd_part(f);
  auto sym = [&f](C z) { return 0.5 * (oracle::lft(0.0, 0.5, 1.0, z) - oracle::lft(0.0, 0.5, 1.0, -z)); };
  for (C z : oracle::circle_samples([](C z) { return z; }, 0.5, 64))
    EXPECT_LE(std::abs(evaluate(o, z) - sym(z)), 1e-10);
  EXPECT_EQ(derivative_at(o, 0.0), f.coefficient(1));
}

TEST(OddPart, OddPlusEvenReconstructs) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    const AnalyticFunction p = random_polynomial(rng);
    const AnalyticFunction o = odd_part(p), e = even_part(p);
    for (int k = 0; k < 20; ++k) {
      const C z = random_point(rng, 1.0);
      EXPECT_LE(std::abs(evaluate(o, z) + evaluate(e, z) - evaluate(p, z)), 1e-12);
    }
  }
}

TEST(ComposeMoebius, Examples) {
  const AnalyticFunction id = AnalyticFunction::identity();
  const AnalyticFunction c0 = compose_moebius(id, MoebiusMap::identity());
  EXPECT_NEAR(std::abs(c0.coefficient(1) - 1.0), 0.0, 1e-12);
  for (std::size_t k = 0; k <= c0.order(); ++k)
    if (k != 1) EXPECT_LE(std::abs(c0.coefficient(k)), 1e-12);

  // T(z) = (z + 0.5) / (1 + 0.5 z)
  const AnalyticFunction sq = compose_moebius(AnalyticFunction::monomial(2), MoebiusMap(-0.5, 1.0));
  EXPECT_NEAR(std::abs(evaluate(sq, 0.0) - 0.25), 0.0, 1e-12);

  const AnalyticFunction shifted = compose_moebius(id, MoebiusMap(0.5, 1.0));
  EXPECT_NEAR(std::abs(shifted.coefficient(0) + 0.5), 0.0, 1e-12);
}

TEST(ComposeMoebius, AgreesWithPointwiseComposition) {
  const AnalyticFunction f = AnalyticFunction::polynomial({0.1, 1.0, C(0.2, 0.1), -0.05});
  const MoebiusMap T(C(0.3, -0.2), std::polar(1.0, 0.7));
  const AnalyticFunction g = compose_moebius(f, T);
  EXPECT_LE(g.tail_bound(), 2 * kTailBudget);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const C z = random_point(rng, g.eval_radius());
    const C expect = oracle::power_sum(coeffs(f), T(z));
    EXPECT_LE(std::abs(evaluate(g, z) - expect), 1e-10);
  }
}

TEST(ComposeMoebius, OutsideCertifiedRadiusIsDomainError) {
  const AnalyticFunction g = compose_moebius(AnalyticFunction::identity(), MoebiusMap(0.0, 1.0, 1.0, 0.0));
  // g is certified on a radius below 1; pushing its centre outside must fail.
  EXPECT_THROW(compose_moebius(g, MoebiusMap(0.0, 1.0, 1.0, 2.0)), DomainError);
  EXPECT_THROW(compose_moebius(g, MoebiusMap::identity(), 0), ArgumentError);
}

TEST(CoefficientsFromCircle, PolynomialIsRecovered) {
  const std::vector<C> p = {1.0, 2.0, 3.0};
  const auto s = oracle::circle_samples([&p](C z) { return oracle::power_sum(p, z); }, 0.9, 16);
  const auto c = coefficients_from_circle(s, 0.9);
  ASSERT_EQ(c.size(), 16u);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_LE(std::abs(c[k] - (k < 3 ? p[k] : C{})), 1e-12);

  const auto id = coefficients_from_circle(oracle::circle_samples([](C z) { return z; }, 0.5, 8), 0.5);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_LE(std::abs(id[k] - (k == 1 ? C(1.0) : C{})), 1e-14);
}

TEST(CoefficientsFromCircle, MoebiusFirstCoefficient) {
  const auto s = oracle::circle_samples([](C z) { return oracle::lft(0.0, 0.5, 1.0, z); }, 0.9, 256);
  EXPECT_NEAR(std::abs(coefficients_from_circle(s, 0.9)[1] - 0.75), 0.0, 1e-10);
}

TEST(CoefficientsFromCircle, MatchesNaiveDft) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  std::vector<C> s(64);
  for (auto& v : s) v = {g(rng), g(rng)};
  const auto fast = coefficients_from_circle(s, 0.7);
  const auto slow = oracle::naive_coefficients(s, 0.7);
  for (std::size_t k = 0; k < 64; ++k) EXPECT_LE(std::abs(fast[k] - slow[k]), 1e-9 * std::abs(slow[k]) + 1e-9);
}

TEST(CoefficientsFromCircle, RoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    const AnalyticFunction p = random_polynomial(rng);
    const auto s = oracle::circle_samples([&p](C z) { return evaluate(p, z); }, 0.8, 32);
    const auto c = coefficients_from_circle(s, 0.8);
    for (std::size_t k = 0; k < 32; ++k) EXPECT_LE(std::abs(c[k] - p.coefficient(k)), 1e-12);
  }
}

TEST(CoefficientsFromCircle, Errors) {
  std::vector<C> s(16, 1.0);
  EXPECT_THROW(coefficients_from_circle(s, 0.0), DomainError);
  EXPECT_THROW(coefficients_from_circle(s, 1.0), DomainError);
  std::vector<C> bad(12, 1.0);
  EXPECT_THROW(coefficients_from_circle(bad, 0.5), ArgumentError);
}

TEST(ExtremalLft, Examples) {
  const AnalyticFunction f = make_extremal_lft(0.0, 0.5, 1.0);
  EXPECT_NEAR(std::abs(evaluate(f, 0.8) - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(evaluate(f, 0.0) + 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(derivative_at(f, 0.0) - 0.75), 0.0, 1e-15);
  EXPECT_EQ(f.provenance(), Provenance::ExtremalLft);
  EXPECT_EQ(f.eval_radius(), 1.0);
  EXPECT_LE(f.tail_bound(), kTailBudget);
}

TEST(ExtremalLft, Errors) {
  EXPECT_THROW(make_extremal_lft(0.0, 0.0, 1.0), ArgumentError);
  EXPECT_THROW(make_extremal_lft(0.0, 1.0, 1.0), ArgumentError);
  EXPECT_THROW(make_extremal_lft(0.0, 0.5, 2.0), ArgumentError);
}

TEST(SchurExtremal, Examples) {
  const AnalyticFunction f = make_schur_extremal(0.5, 0.0);
  for (C z : oracle::circle_samples([](C z) { return z; }, 0.5, 64))
    EXPECT_LE(std::abs(evaluate(f, z) - 0.5 * z - 0.75 * z * z / (1.0 + 0.5 * z)), 1e-10);
  EXPECT_EQ(derivative_at(f, 0.0), C(0.5));
  const AnalyticFunction rot = make_schur_extremal(1.0, 0.0);
  EXPECT_EQ(coeffs(rot), (std::vector<C>{0.0, 1.0}));
  EXPECT_THROW(make_schur_extremal(0.0, 1.0), ArgumentError);
}

TEST(Constructed, SeriesAgreesWithIndependentPowerSum) {
  std::mt19937_64 rng(17);
  const std::vector<AnalyticFunction> fs = {
      make_extremal_lft(C(1, 2), C(0, 0.4), -1.0), make_schur_extremal(C(0.3, 0.4), 0.2),
      make_moebius(MoebiusMap(C(0.2, 0.1), C(0, 1), 0.5, 1.0)), moebius_half(),
      compose_moebius(AnalyticFunction::polynomial({0.0, 1.0, 0.2}), MoebiusMap(0.3, 1.0))};
  for (const auto& f : fs) {
    const auto c = coeffs(f);
    for (int i = 0; i < 100; ++i) {
      const C z = random_point(rng, f.eval_radius());
      EXPECT_LE(std::abs(evaluate(f, z) - oracle::power_sum(c, z)), 1e-12);
    }
  }
}

TEST(Constructed, ClosedFormAgreesWithSeries) {
  std::mt19937_64 rng(18);
  const AnalyticFunction f = make_extremal_lft(C(1, 2), C(0, 0.4), -1.0);
  ASSERT_NE(f.closed_form(), nullptr);
  for (int i = 0; i < 100; ++i) {
    const C z = random_point(rng, 0.999);
    EXPECT_LE(std::abs(evaluate(f, z) - oracle::lft(C(1, 2), C(0, 0.4), -1.0, z)), 1e-11);
  }
}

TEST(MoebiusMap, AutomorphismPreservesCircle) {
  const MoebiusMap T(C(0.6, -0.3), std::polar(1.0, 2.0));
  EXPECT_TRUE(T.is_automorphism());
  for (C z : oracle::circle_samples([](C z) { return z; }, 1.0, 128)) EXPECT_NEAR(std::abs(T(z)), 1.0, 1e-12);
  const MoebiusMap Ti = T.inverse();
  EXPECT_LE(std::abs(Ti(T(C(0.2, 0.3))) - C(0.2, 0.3)), 1e-14);
}

TEST(MoebiusMap, Preconditions) {
  EXPECT_THROW(MoebiusMap(1.0, 1.0), ArgumentError);
  EXPECT_THROW(MoebiusMap(0.5, 1.1), ArgumentError);
}

TEST(GrowthNormalization, FixesPlusMinusX) {
  const AnalyticFunction f = AnalyticFunction::polynomial({0.3, 1.0, C(0.2, -0.1), 0.05});
  for (C d : {C(0.5), C(0.2, 0.6), C(-0.7, 0.1)}) {
    const GrowthNormalization n = normalize_for_growth(f, d);
    EXPECT_NEAR(n.x, std::abs(d) / (1.0 + std::sqrt(1.0 - std::norm(d))), 1e-15);
    EXPECT_LE(std::abs(n.T(n.x) - d), 1e-12);
    EXPECT_LE(std::abs(n.T(-n.x)), 1e-12);
    EXPECT_LE(std::abs(evaluate(n.g, n.x) - n.x), 1e-10);
    EXPECT_LE(std::abs(evaluate(n.g, -n.x) + n.x), 1e-10);
  }
  EXPECT_THROW(normalize_for_growth(f, 0.0), ArgumentError);
  EXPECT_THROW(normalize_for_growth(AnalyticFunction::constant(2.0), 0.5), ArgumentError);
}

TEST(MaxModulus, MatchesDenseScan) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    const AnalyticFunction p = random_polynomial(rng);
    const double fast = max_modulus_on_circle(p, 0.9).value;
    const double dense = oracle::dense_circle_max([&p](C z) { return oracle::power_sum(coeffs(p), z); }, 0.9, 1 << 16);
    EXPECT_GE(fast, dense - 1e-12);
    EXPECT_LE(fast, dense + 1e-6);
  }
}
