#pragma once

// Empirical sweeps over parametric families for three open extremal problems:
// the linearization profile phi(r), hyperbolic radius against minimum
// density, and the centred radius M(f). Outputs are envelopes, not sharp
// constants.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diskdiam/fnkit.hpp"

namespace diskdiam {

enum class FamilyKind { LftExtremal, SchurExtremal, RandomPolynomial, UnivalentQuadratic };

std::string_view to_string(FamilyKind k);
FamilyKind family_kind_from_string(std::string_view s);

/// `grid` holds b (lft-extremal, real in (0,1)), |a| (schur-extremal, in
/// (0,1]) or eps (univalent-quadratic, in [0, 1/4]); random-polynomial draws
/// `count` members from `seed`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::LftExtremal;
  std::vector<double> grid;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  double target_diam = 2.0;
};

struct FamilyMember {
  std::size_t id = 0;
  std::map<std::string, double> params;
  AnalyticFunction f;
};

/// Members rescaled to Diam f(D) = target_diam.
std::vector<FamilyMember> family_members(const FamilySpec& spec);

struct SweepRecord {
  std::size_t member_id = 0;
  std::map<std::string, double> params;
  double abscissa = 0.0;
  double value = 0.0;
};

struct EnvelopePoint {
  double abscissa = 0.0;
  double value = 0.0;
};

struct SweepResult {
  std::string name;
  std::vector<SweepRecord> records;
  std::vector<EnvelopePoint> envelope;
  std::vector<double> grid;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::vector<std::string> diagnostics;
};

/// max_{|z|<=r} |f - f(0) - f'(0) z| / (1 - |f'(0)|) per member and r;
/// envelope is the pointwise max over members.
SweepResult phi_profile(const FamilySpec& family, const std::vector<double>& r_grid);

/// f_eps = z + eps z^2 normalized to Diam 2: abscissa Lambda - 1, value R_h.
/// Envelope at m is the max R_h over members with Lambda <= m.
SweepResult problem2_sweep(const std::vector<double>& eps_grid, std::size_t grid_resolution = 64);

/// M(f) = min_w sup_z |f(z) - f(w)|: abscissa |f'(w_f)| (1 - |w_f|^2), value
/// M(f). Envelope at a is the max M over members with abscissa >= a.
SweepResult problem3_sweep(const FamilySpec& family, std::size_t w_grid_resolution = 16);

}  // namespace diskdiam
