#pragma once

// Recognizes the extremal families of the diameter bounds from coefficients.

#include <string>
#include <string_view>

#include "diskdiam/fnkit.hpp"

namespace diskdiam {

enum class ExtremalKind { Linear, Monomial, Moebius, NonExtremal };

std::string_view to_string(ExtremalKind k);

/// Linear: f = a + c z. Monomial: f = a + c z^degree, degree >= 2.
/// Moebius: f = c (z - b) / (1 - conj(b) z) + a with 0 < |b| < 1.
struct Classification {
  ExtremalKind kind = ExtremalKind::NonExtremal;
  Complex a{};
  Complex b{};
  Complex c{};
  std::size_t degree = 0;
  /// Largest coefficient mismatch of the fit, relative to max_{k>=1} |c_k|.
  double residual = 0.0;
  std::string detail;
};

Classification equality_classifier(const AnalyticFunction& f, double tol = 1e-8);

}  // namespace diskdiam
