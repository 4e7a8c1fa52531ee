#include "diskdiam/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace diskdiam {

std::string_view to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::Linear: return "linear";
    case ExtremalKind::Monomial: return "monomial";
    case ExtremalKind::Moebius: return "moebius-extremal";
    case ExtremalKind::NonExtremal: return "non-extremal";
  }
  return "non-extremal";
}

Classification equality_classifier(const AnalyticFunction& f, double tol) {
  Classification out;
  const std::size_t K = f.order();
  double scale = 0.0;
  std::size_t lead = 0;
  for (std::size_t k = 1; k <= K; ++k) {
    const double m = std::abs(f.coefficient(k));
    if (m > scale) {
      scale = m;
      lead = k;
    }
  }
  if (scale == 0.0) {
    out.detail = "constant";
    return out;
  }

  // Single nonzero coefficient past c_0.
  double others = 0.0;
  for (std::size_t k = 1; k <= K; ++k)
    if (k != lead) others = std::max(others, std::abs(f.coefficient(k)));
  if (others <= tol * scale) {
    out.kind = lead == 1 ? ExtremalKind::Linear : ExtremalKind::Monomial;
    out.a = f.coefficient(0);
    out.c = f.coefficient(lead);
    out.degree = lead;
    out.residual = others / scale;
    return out;
  }

  const Complex c1 = f.coefficient(1);
  std::ostringstream d;
  if (std::abs(c1) <= tol * scale) {
    out.residual = 1.0;
    d << "no Moebius fit: f'(0) vanishes";
    out.detail = d.str();
    return out;
  }
  const Complex b = std::conj(f.coefficient(2) / c1);
  const double mb = std::abs(b);
  if (!(mb > 0.0 && mb < 1.0)) {
    out.residual = 1.0;
    d << "no Moebius fit: |b| = " << mb;
    out.detail = d.str();
    return out;
  }
  const double nb = 1.0 - mb * mb;
  const Complex c = c1 / nb;
  const Complex a = f.coefficient(0) + c * b;
  double worst = 0.0;
  Complex p = 1.0;  // conj(b)^{k-1}
  for (std::size_t k = 1; k <= K; ++k) {
    worst = std::max(worst, std::abs(f.coefficient(k) - c * nb * p));
    p *= std::conj(b);
  }
  // A Moebius map continues with c nb conj(b)^K z^{K+1}; the truncated series
  // leaves room for at most tail / R^{K+1} there.
  const double room = f.tail_bound() / std::pow(f.eval_radius(), static_cast<double>(K + 1));
  worst = std::max(worst, std::abs(c * nb * p) - room);
  out.residual = worst / scale;
  out.a = a;
  out.b = b;
  out.c = c;
  if (out.residual <= tol) {
    out.kind = ExtremalKind::Moebius;
  } else {
    d << "Moebius fit residual " << out.residual;
    out.detail = d.str();
  }
  return out;
}

}  // namespace diskdiam
