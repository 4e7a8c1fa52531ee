#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diskdiam/fnkit.hpp"

namespace diskdiam {

enum class Verdict { Pass, Fail, Inconclusive, HypothesisNotMet, Skipped };

std::string_view to_string(Verdict v);

/// One instance of an inequality: lhs <= rhs, with slack = rhs - lhs.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool equality = false;
  std::vector<Complex> witness;
  std::map<std::string, double> tolerances;
  Verdict verdict = Verdict::Pass;
  std::string detail;

  /// Inconclusive, skipped and hypothesis-not-met reports are not failures.
  bool failed() const { return verdict == Verdict::Fail; }
};

/// Fills slack, equality and verdict: pass iff slack >= -numeric_tol,
/// equality iff |slack| <= equality_tol.
BoundReport make_report(std::string name, double lhs, double rhs, double numeric_tol,
                        double equality_tol);

}  // namespace diskdiam
