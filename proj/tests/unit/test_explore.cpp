#include <gtest/gtest.h>

#include "diskdiam/bounds.hpp"
#include "diskdiam/errors.hpp"
#include "diskdiam/explore.hpp"

using namespace diskdiam;

namespace {

FamilySpec lft_family() {
  FamilySpec s;
  s.kind = FamilyKind::LftExtremal;
  s.grid = {0.25, 0.5, 0.75};
  return s;
}

FamilySpec random_family(std::uint64_t seed) {
  FamilySpec s;
  s.kind = FamilyKind::RandomPolynomial;
  s.seed = seed;
  s.count = 6;
  return s;
}

// Each record sits under the envelope at its own abscissa. A prefix envelope
// at m covers abscissas <= m; a suffix envelope at a covers abscissas >= a.
void expect_dominated(const SweepResult& s, bool prefix) {
  for (const SweepRecord& rec : s.records) {
    double env = -1.0;
    for (const EnvelopePoint& e : s.envelope) {
      if (prefix && e.abscissa >= rec.abscissa) {
        env = e.value;
        break;
      }
      if (!prefix && e.abscissa <= rec.abscissa) env = e.value;
    }
    EXPECT_GE(env, rec.value - 1e-15) << s.name << " member " << rec.member_id;
  }
}

}  // namespace

TEST(FamilyKind, RoundTrip) {
  for (FamilyKind k : {FamilyKind::LftExtremal, FamilyKind::SchurExtremal,
                       FamilyKind::RandomPolynomial, FamilyKind::UnivalentQuadratic})
    EXPECT_EQ(family_kind_from_string(to_string(k)), k);
  EXPECT_THROW(family_kind_from_string("bogus"), ArgumentError);
}

TEST(FamilyMembers, NormalizedToTargetDiameter) {
  for (const FamilyMember& m : family_members(random_family(51))) {
    const DiskDiameter d = certified_disk_diameter(m.f);
    EXPECT_NEAR(d.best(), 2.0, 1e-6);
  }
  FamilySpec bad = lft_family();
  bad.grid = {1.0};
  EXPECT_THROW(family_members(bad), ArgumentError);
}

TEST(PhiProfile, VanishesAtOriginAndIsNondecreasing) {
  const std::vector<double> rs = {0.0, 0.2, 0.4, 0.6, 0.8};
  const SweepResult s = phi_profile(lft_family(), rs);
  ASSERT_EQ(s.envelope.size(), rs.size());
  EXPECT_NEAR(s.envelope.front().value, 0.0, 1e-15);
  for (std::size_t i = 1; i < s.envelope.size(); ++i)
    EXPECT_GE(s.envelope[i].value, s.envelope[i - 1].value - 1e-12);
  EXPECT_EQ(s.records.size(), 3 * rs.size());
  EXPECT_THROW(phi_profile(lft_family(), {0.5, 0.2}), ArgumentError);
}

TEST(Problem2, DiskEndpointAndEnvelope) {
  const SweepResult s = problem2_sweep({0.0, 0.05, 0.1, 0.2});
  ASSERT_EQ(s.records.size(), 4u);
  EXPECT_NEAR(s.records.front().abscissa, 0.0, 1e-9);
  EXPECT_NEAR(s.records.front().value, 1.0, 1e-9);
  for (const SweepRecord& r : s.records) EXPECT_GE(r.abscissa, -1e-9);
  for (std::size_t i = 1; i < s.envelope.size(); ++i) {
    EXPECT_GE(s.envelope[i].abscissa, s.envelope[i - 1].abscissa);
    EXPECT_GE(s.envelope[i].value, s.envelope[i - 1].value);
  }
  expect_dominated(s, true);
}

TEST(Problem3, LftFamilyHasUnitRadius) {
  const SweepResult s = problem3_sweep(lft_family());
  ASSERT_EQ(s.records.size(), 3u);
  for (const SweepRecord& r : s.records) {
    EXPECT_NEAR(r.value, 1.0, 1e-6);
    EXPECT_NEAR(r.params.at("w_re"), r.params.at("b"), 1e-3);
  }
  expect_dominated(s, false);
}

TEST(Problem3, RadiusBetweenHalfDiameterAndDiameter) {
  const SweepResult s = problem3_sweep(random_family(52));
  for (const SweepRecord& r : s.records) {
    EXPECT_GE(r.value, r.params.at("diam_lower") / 2.0 - 1e-6);
    EXPECT_LE(r.value, r.params.at("diam_upper") + 1e-6);
    EXPECT_GE(r.abscissa, 0.0);
  }
  for (std::size_t i = 1; i < s.envelope.size(); ++i)
    EXPECT_LE(s.envelope[i].value, s.envelope[i - 1].value);
  expect_dominated(s, false);
}

TEST(Sweeps, DeterministicUnderSeed) {
  const SweepResult a = problem3_sweep(random_family(53), 8);
  const SweepResult b = problem3_sweep(random_family(53), 8);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].abscissa, b.records[i].abscissa);
    EXPECT_EQ(a.records[i].value, b.records[i].value);
  }
  const SweepResult c = problem3_sweep(random_family(54), 8);
  EXPECT_NE(a.records.front().value, c.records.front().value);
}
