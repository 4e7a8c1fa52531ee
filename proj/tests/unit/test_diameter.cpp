#include <gtest/gtest.h>

#include <random>

#include "diskdiam/diameter.hpp"
#include "diskdiam/errors.hpp"
#include "diskdiam/families.hpp"
#include "diskdiam/planar.hpp"
#include "oracles.hpp"

using namespace diskdiam;
using oracle::C;

namespace {

oracle::Fn as_fn(const AnalyticFunction& f) {
  return [&f](C z) { return evaluate(f, z); };
}

// 2 sup|f'| h / 2 bounds how far a grid of spacing h can fall below D_r.
double sampling_gap(const AnalyticFunction& f, double r, std::size_t n) {
  return r * series_sup_bound(f, r, 1) * oracle::kTwoPi / static_cast<double>(n);
}

}  // namespace

TEST(Planar, FarthestPairMatchesQuadraticScan) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<C> pts(2 + trial % 40);
    for (auto& p : pts) p = {g(rng), g(rng)};
    const FarthestPair fp = farthest_pair(pts);
    EXPECT_NEAR(fp.distance, oracle::pair_diameter(pts), 1e-12);
    EXPECT_NEAR(std::abs(pts[fp.i] - pts[fp.j]), fp.distance, 1e-15);
  }
}

TEST(Planar, DegenerateSets) {
  const std::vector<C> one = {C(1, 1)};
  EXPECT_EQ(farthest_pair(one).distance, 0.0);
  const std::vector<C> line = {0.0, 1.0, 3.0, 2.0};
  const FarthestPair fp = farthest_pair(line);
  EXPECT_DOUBLE_EQ(fp.distance, 3.0);
  EXPECT_EQ(fp.i, 0u);
  EXPECT_EQ(fp.j, 2u);
}

TEST(Planar, TiesResolveToSmallestIndexPair) {
  // Square: both diagonals have length sqrt 2.
  const std::vector<C> sq = {0.0, 1.0, C(1, 1), C(0, 1)};
  const FarthestPair fp = farthest_pair(sq);
  EXPECT_EQ(fp.i, 0u);
  EXPECT_EQ(fp.j, 2u);
}

TEST(ImageCircleDiameter, Examples) {
  const DiameterEstimate id = image_circle_diameter(AnalyticFunction::identity(), 0.5, 1e-6);
  EXPECT_LE(id.lower, 1.0 + 1e-15);
  EXPECT_GE(id.upper, 1.0);
  EXPECT_LE(id.width(), 1e-6);

  const DiameterEstimate sq = image_circle_diameter(AnalyticFunction::monomial(2), 0.5, 1e-6);
  EXPECT_LE(sq.lower, 0.5 + 1e-15);
  EXPECT_GE(sq.upper, 0.5);
  EXPECT_NEAR(oracle::circle_diameter([](C z) { return z * z; }, 0.5, 1024), 0.5, 1e-15);

  const AnalyticFunction lft = make_extremal_lft(0.0, 0.5, 1.0);
  const DiameterEstimate e = image_circle_diameter(lft, 0.999, 1e-6);
  const double brute = oracle::circle_diameter([](C z) { return oracle::lft(0.0, 0.5, 1.0, z); }, 0.999, 1 << 14);
  EXPECT_GE(e.upper, brute);
  EXPECT_GE(e.lower, brute - sampling_gap(lft, 0.999, 1 << 14));
  EXPECT_LT(e.upper, 2.0);
}

TEST(ImageCircleDiameter, WitnessInvariants) {
  const AnalyticFunction f = AnalyticFunction::polynomial({0.0, 1.0, C(0.3, 0.1), 0.2});
  for (double r : {0.3, 0.7, 1.0}) {
    const DiameterEstimate e = image_circle_diameter(f, r, 1e-7);
    EXPECT_NEAR(std::abs(e.witness[0]), r, 1e-12);
    EXPECT_NEAR(std::abs(e.witness[1]), r, 1e-12);
    EXPECT_NEAR(std::abs(evaluate(f, e.witness[0]) - evaluate(f, e.witness[1])), e.lower, 1e-12);
    EXPECT_LE(0.0, e.lower);
    EXPECT_LE(e.lower, e.upper);
    EXPECT_LE(e.width(), 1e-7);
  }
}

TEST(ImageCircleDiameter, FrozenValues) {
  // Independent pair search (dense grid + simplex polish).
  const AnalyticFunction q = AnalyticFunction::polynomial({0.0, 1.0, 0.2});
  const DiameterEstimate a = image_circle_diameter(q, 1.0, 1e-8);
  EXPECT_LE(a.lower, 2.1373765502515476 + 1e-12);
  EXPECT_GE(a.upper, 2.1373765502515476 - 1e-12);
  const AnalyticFunction c = AnalyticFunction::polynomial({0.0, 1.0, 0.0, 0.2});
  const DiameterEstimate b = image_circle_diameter(c, 0.7, 1e-8);
  EXPECT_LE(b.lower, 1.5372 + 1e-12);
  EXPECT_GE(b.upper, 1.5372 - 1e-12);
}

TEST(ImageCircleDiameter, BruteForceLiesInsideEnclosure) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const AnalyticFunction p = random_polynomial(rng);
    for (double r : {0.3, 0.8}) {
      const DiameterEstimate e = image_circle_diameter(p, r, 1e-6);
      const std::size_t n = 1 << 12;
      const double brute = oracle::circle_diameter(as_fn(p), r, n);
      EXPECT_LE(brute, e.upper);
      EXPECT_GE(brute, e.lower - sampling_gap(p, r, n));
    }
  }
}

TEST(ImageCircleDiameter, ScalingEquivariance) {
  const AnalyticFunction f = AnalyticFunction::polynomial({0.1, 1.0, C(0.3, 0.1), 0.2});
  const C lambda(-1.5, 2.0);
  const DiameterEstimate a = image_circle_diameter(f, 0.6, 1e-7);
  const DiameterEstimate b = image_circle_diameter(f.affine(lambda, 3.0), 0.6, 1e-7);
  const double m = std::abs(lambda);
  EXPECT_LE(b.lower, m * a.upper + 1e-12);
  EXPECT_GE(b.upper, m * a.lower - 1e-12);
}

TEST(ImageCircleDiameter, Errors) {
  const AnalyticFunction f = AnalyticFunction::identity();
  EXPECT_THROW(image_circle_diameter(f, 0.0, 1e-6), DomainError);
  EXPECT_THROW(image_circle_diameter(f, 0.5, 0.0), ArgumentError);
  const AnalyticFunction g = compose_moebius(f, MoebiusMap(0.3, 1.0));
  EXPECT_THROW(image_circle_diameter(g, 1.0, 1e-6), DomainError);

  DiameterOptions tight;
  tight.max_samples = 64;
  try {
    image_circle_diameter(AnalyticFunction::polynomial({0.0, 1.0, 0.5, 0.3}), 0.9, 1e-9, tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_LE(e.best().lower, e.best().upper);
    EXPECT_EQ(e.best().samples_used, 64u);
  }
}

TEST(ClosedFormDiameter, UnitCircleOfAutomorphism) {
  const AnalyticFunction f = make_extremal_lft(C(1, 2), C(0, 0.4), -1.0);
  const DiameterEstimate e = closed_form_circle_diameter(f, 1.0, 1e-9);
  EXPECT_NEAR(e.lower, 2.0, 1e-12);
  EXPECT_GE(e.upper, 2.0);
  EXPECT_THROW(closed_form_circle_diameter(AnalyticFunction::identity(), 1.0, 1e-6), ArgumentError);
}

TEST(BoundaryAttainment, Examples) {
  const BoundReport a = boundary_attainment_check(AnalyticFunction::identity(), 0.5, 10000);
  EXPECT_EQ(a.verdict, Verdict::Pass);
  EXPECT_LE(a.lhs, 1.0);
  const BoundReport b =
      boundary_attainment_check(AnalyticFunction::polynomial({0.0, 1.0, 0.0, 0.2}), 0.7, 10000, 3);
  EXPECT_EQ(b.verdict, Verdict::Pass);
  const BoundReport c = boundary_attainment_check(make_extremal_lft(0.0, 0.5, 1.0), 0.9, 10000, 4);
  EXPECT_EQ(c.verdict, Verdict::Pass);
}

TEST(BoundaryAttainment, InteriorPairsMatchBoundaryBruteForce) {
  // Independent re-check of the interior sampling with the quadratic oracle.
  const AnalyticFunction f = AnalyticFunction::polynomial({0.0, 1.0, 0.0, 0.2});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double interior = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const C z = std::polar(0.7 * std::sqrt(u(rng)), oracle::kTwoPi * u(rng));
    const C w = std::polar(0.7 * std::sqrt(u(rng)), oracle::kTwoPi * u(rng));
    interior = std::max(interior, std::abs(evaluate(f, z) - evaluate(f, w)));
  }
  EXPECT_LE(interior, image_circle_diameter(f, 0.7, 1e-9).upper + 1e-9);
}

TEST(RatioCurve, Examples) {
  const RatioCurve id = ratio_curve(AnalyticFunction::identity(), default_ratio_grid(), 1e-6);
  ASSERT_EQ(id.ratios.size(), 17u);
  for (const auto& p : id.ratios) {
    EXPECT_LE(p.lower, 2.0 + 1e-12);
    EXPECT_GE(p.upper, 2.0 - 1e-12);
  }

  const RatioCurve sq = ratio_curve(AnalyticFunction::monomial(2), {0.2, 0.4, 0.6}, 1e-6);
  const double expect[] = {0.4, 0.8, 1.2};
  for (int i = 0; i < 3; ++i) {
    EXPECT_LE(sq.ratios[i].lower, expect[i] + 1e-12);
    EXPECT_GE(sq.ratios[i].upper, expect[i] - 1e-12);
  }
  EXPECT_TRUE(sq.nondecreasing());
  EXPECT_LT(sq.ratios[0].upper, sq.ratios[1].lower);
  EXPECT_LT(sq.ratios[1].upper, sq.ratios[2].lower);

  const RatioCurve p = ratio_curve(AnalyticFunction::polynomial({0.0, 0.9, 0.05}), default_ratio_grid(), 1e-6);
  EXPECT_GE(p.ratios.front().upper, 2.0 * 0.9 * (1.0 - 1e-6));
  // Frozen by an independent pair search.
  EXPECT_NEAR(p.ratios.front().lower, 1.8000277767062005, 2e-6);
}

TEST(RatioCurve, GridContract) {
  const AnalyticFunction f = AnalyticFunction::identity();
  EXPECT_THROW(ratio_curve(f, {}, 1e-6), ArgumentError);
  EXPECT_THROW(ratio_curve(f, {0.5, 0.4}, 1e-6), ArgumentError);
  EXPECT_THROW(ratio_curve(f, {0.0, 0.4}, 1e-6), ArgumentError);
}

TEST(RatioCurve, RandomFamilyIsNondecreasingAndAboveTwiceDerivative) {
  for (const AnalyticFunction& p : random_polynomials(23, 20)) {
    const RatioCurve c = ratio_curve(p, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 1e-6);
    EXPECT_TRUE(c.nondecreasing());
    for (const auto& pt : c.ratios) EXPECT_GE(pt.upper, 2.0 * std::abs(p.coefficient(1)) - 1e-6);
  }
}

TEST(LinearityProbe, Examples) {
  const AnalyticFunction lin = AnalyticFunction::polynomial({3.0, 0.7});
  const BoundReport a = linearity_probe(ratio_curve(lin, default_ratio_grid(), 1e-6), lin);
  EXPECT_EQ(a.verdict, Verdict::Pass);
  EXPECT_TRUE(a.equality);

  const AnalyticFunction quad = AnalyticFunction::polynomial({0.0, 1.0, 0.3});
  const BoundReport b = linearity_probe(ratio_curve(quad, default_ratio_grid(), 1e-6), quad);
  EXPECT_EQ(b.verdict, Verdict::Pass);
  EXPECT_FALSE(b.equality);

  const AnalyticFunction lft = make_extremal_lft(0.0, 0.5, 1.0);
  const BoundReport c = linearity_probe(ratio_curve(lft, default_ratio_grid(), 1e-6), lft);
  EXPECT_EQ(c.verdict, Verdict::Pass);
  EXPECT_FALSE(c.equality);
}

TEST(LinearityProbe, WideEnclosuresAreInconclusive) {
  // A barely nonlinear map whose ratio variation hides inside loose enclosures.
  const AnalyticFunction f = AnalyticFunction::polynomial({0.0, 1.0, 1e-5});
  const RatioCurve c = ratio_curve(f, {0.1, 0.5, 0.9}, 1e-3);
  EXPECT_EQ(linearity_probe(c, f, 1e-7).verdict, Verdict::Inconclusive);
}
