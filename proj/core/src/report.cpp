#include "diskdiam/report.hpp"

#include <cmath>

namespace diskdiam {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::HypothesisNotMet:
      return "hypothesis-not-met";
    case Verdict::Skipped:
      return "skipped";
  }
  return "unknown";
}

BoundReport make_report(std::string name, double lhs, double rhs, double numeric_tol,
                        double equality_tol) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.equality = std::abs(r.slack) <= equality_tol;
  r.verdict = r.slack >= -numeric_tol ? Verdict::Pass : Verdict::Fail;
  r.tolerances["numeric"] = numeric_tol;
  r.tolerances["equality"] = equality_tol;
  return r;
}

}  // namespace diskdiam
