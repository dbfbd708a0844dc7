#include "kerrsq/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrsq/errors.hpp"

namespace kerrsq {

ResponseKernel::ResponseKernel(KernelShape shape, double tau_r)
    : shape_(shape), tau_r_(tau_r) {
  if (!(std::isfinite(tau_r) && tau_r > 0.0))
    throw ConfigError("ResponseKernel: tau_r must be finite and positive");
}

ResponseKernel ResponseKernel::exponential(double tau_r) {
  return ResponseKernel(KernelShape::exponential, tau_r);
}

ResponseKernel ResponseKernel::dirac() {
  return ResponseKernel(KernelShape::dirac, 1.0);
}

void ResponseKernel::require_pointwise() const {
  if (shape_ == KernelShape::dirac)
    throw std::domain_error(
        "ResponseKernel: the dirac kernel has no pointwise density; only its "
        "spectral filter is defined");
}

double ResponseKernel::H(double t) const {
  require_pointwise();
  if (t < 0.0) return 0.0;
  return std::exp(-t / tau_r_) / tau_r_;
}

double ResponseKernel::h(double t) const { return H(std::fabs(t)); }

double ResponseKernel::h_tilde(double theta) const {
  require_pointwise();
  return std::exp(-std::fabs(theta));
}

double ResponseKernel::g(double tau) const {
  require_pointwise();
  const double x = std::fabs(tau) / tau_r_;
  return (1.0 + x) * std::exp(-x) / tau_r_;
}

double ResponseKernel::spectral_filter(double Omega) const {
  return shape_ == KernelShape::dirac ? 1.0 : lorentzian(Omega);
}

double lorentzian(double Omega) { return 1.0 / (1.0 + Omega * Omega); }

}  // namespace kerrsq
