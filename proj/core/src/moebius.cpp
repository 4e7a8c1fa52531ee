#include <cmath>

#include "diskdiam/errors.hpp"
#include "diskdiam/fnkit.hpp"

namespace diskdiam {

MoebiusMap::MoebiusMap(Complex xi, Complex eta, Complex scale, Complex shift)
    : xi_(xi), eta_(eta), scale_(scale), shift_(shift) {
  if (!(std::abs(xi) < 1.0)) throw ArgumentError("moebius: |xi| must be < 1");
  if (std::abs(std::abs(eta) - 1.0) > 1e-14) throw ArgumentError("moebius: |eta| must be 1");
  if (scale == Complex{}) throw ArgumentError("moebius: scale must be nonzero");
}

bool MoebiusMap::is_automorphism() const {
  return scale_ == Complex{1.0} && shift_ == Complex{};
}

Complex MoebiusMap::operator()(Complex z) const {
  return scale_ * eta_ * (z - xi_) / (1.0 - std::conj(xi_) * z) + shift_;
}

Complex MoebiusMap::derivative(Complex z) const {
  const Complex den = 1.0 - std::conj(xi_) * z;
  return scale_ * eta_ * (1.0 - std::norm(xi_)) / (den * den);
}

Complex MoebiusMap::second_derivative(Complex z) const {
  const Complex den = 1.0 - std::conj(xi_) * z;
  return 2.0 * std::conj(xi_) * scale_ * eta_ * (1.0 - std::norm(xi_)) / (den * den * den);
}

MoebiusMap MoebiusMap::inverse() const {
  if (!is_automorphism()) throw ArgumentError("moebius: inverse needs scale 1 and shift 0");
  return MoebiusMap(-eta_ * xi_, std::conj(eta_));
}

std::vector<Complex> MoebiusMap::taylor(std::size_t order) const {
  std::vector<Complex> c(order + 1);
  const Complex lead = scale_ * eta_;
  c[0] = -lead * xi_ + shift_;
  Complex power = 1.0;  // conj(xi)^(k-1)
  const double gain = 1.0 - std::norm(xi_);
  for (std::size_t k = 1; k <= order; ++k) {
    c[k] = lead * power * gain;
    power *= std::conj(xi_);
  }
  return c;
}

double MoebiusMap::tail(std::size_t order, double r) const {
  const double m = std::abs(xi_);
  return std::abs(scale_) * (1.0 - m * m) * std::pow(m, static_cast<double>(order)) *
         std::pow(r, static_cast<double>(order + 1)) / (1.0 - m * r);
}

double MoebiusMap::max_modulus(double r) const {
  const double m = std::abs(xi_);
  return std::abs(scale_) * (r + m) / (1.0 + m * r) + std::abs(shift_);
}

ClosedForm MoebiusMap::closed_form() const {
  const MoebiusMap T = *this;
  const double m = std::abs(xi_);
  const double a = std::abs(scale_) * (1.0 - m * m);
  ClosedForm cf;
  cf.value = [T](Complex z) { return T(z); };
  cf.first = [T](Complex z) { return T.derivative(z); };
  cf.second = [T](Complex z) { return T.second_derivative(z); };
  cf.first_bound = [a, m](double r) { return a / ((1.0 - m * r) * (1.0 - m * r)); };
  cf.second_bound = [a, m](double r) {
    const double d = 1.0 - m * r;
    return 2.0 * m * a / (d * d * d);
  };
  return cf;
}

}  // namespace diskdiam
