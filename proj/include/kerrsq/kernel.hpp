#pragma once

namespace kerrsq {

enum class KernelShape { exponential, dirac };

// Nonlinear response of an electronic Kerr medium with relaxation time tau_r.
//
// The causal density H(t) = exp(-t/tau_r)/tau_r has unit area; h(t) = H(|t|)
// is its even symmetrization, h~(theta) = tau_r * h(theta tau_r) the
// dimensionless form, and g(tau) = (1/tau_r)(1 + |tau|/tau_r) h~(tau/tau_r)
// is the two-time correlation kernel. Their Fourier images are 2 L(Omega)
// and 4 L(Omega)^2 with the Lorentzian L(Omega) = 1/(1 + Omega^2),
// Omega = omega tau_r.
//
// The dirac member is the inertia-free limit: its spectral filter is flat
// (L == 1) and pointwise evaluation is undefined (the h^2 moments diverge),
// so H/h/h_tilde/g throw for it.
class ResponseKernel {
 public:
  explicit ResponseKernel(KernelShape shape, double tau_r = 1.0);

  static ResponseKernel exponential(double tau_r = 1.0);
  static ResponseKernel dirac();

  KernelShape shape() const noexcept { return shape_; }
  double tau_r() const noexcept { return tau_r_; }

  double H(double t) const;        // causal response density, exactly 0 for t < 0
  double h(double t) const;        // H(|t|)
  double h_tilde(double theta) const;  // tau_r * h(theta tau_r) = exp(-|theta|)
  double g(double tau) const;      // (1/tau_r)(1 + |tau|/tau_r) h_tilde(tau/tau_r)

  // Lorentzian L(Omega) for the exponential kernel, identically 1 for dirac.
  double spectral_filter(double Omega) const;

 private:
  void require_pointwise() const;

  KernelShape shape_;
  double tau_r_;
};

// L(Omega) = 1 / (1 + Omega^2). Strictly decreasing in |Omega|, range (0, 1].
double lorentzian(double Omega);

}  // namespace kerrsq
