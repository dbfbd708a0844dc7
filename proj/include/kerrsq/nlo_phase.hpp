#pragma once

#include "kerrsq/integrate.hpp"
#include "kerrsq/kernel.hpp"
#include "kerrsq/pulse.hpp"

namespace kerrsq {

// Integrated per-photon nonlinear phase coefficients. 2*gamma1 is the phase
// shift per photon the probe imprints on itself over the interaction length;
// gamma_x couples the two pulses. Validity regime gamma << 1 (a soft warning
// is emitted above 0.1, see spectra warnings).
struct InteractionParams {
  double gamma1 = 0.0;   // SPM of the probe
  double gamma2 = 0.0;   // SPM of the control
  double gamma_x = 0.0;  // XPM coupling

  void validate() const;  // throws ConfigError on negative or non-finite values
};

// Nonlinear phase additions, damping exponents and derived combinations at
// one time slice t. The mu terms are the quantum damping of the coherent
// amplitude; phi_star and Phi_tilde are stored forms of the invariants
//   phi_star = phi1^2 + phi1x * phi2x,
//   Phi_tilde = phi1 + linear_phase1 + phi2x.
struct NonlinearPhases {
  double t = 0.0;
  double phi1 = 0.0;           // 2 gamma1 n1(t), SPM phase of the probe
  double phi1x = 0.0;          // 2 gamma_x n1(t)
  double phi2x = 0.0;          // 2 gamma_x n2(t), XPM phase from the control
  double mu1 = 0.0;            // gamma1^2 n1(t) / 2
  double mu2x = 0.0;           // gamma_x^2 n2(t) / 2
  double linear_phase1 = 0.0;  // varphi_1(t) of the probe
  double phi_star = 0.0;
  double Phi_tilde = 0.0;
};

NonlinearPhases make_phases(double t, double phi1, double phi1x, double phi2x,
                            double mu1, double mu2x, double linear_phase1);

// Replace the probe's linear phase, keeping the nonlinear pieces.
NonlinearPhases with_linear_phase(const NonlinearPhases& ph, double linear_phase1);

// Quasi-static slice: the envelope is frozen over the response time
// (tau_p >> tau_r), which collapses the convolutions to
//   phi = phi_0 r^2(t),  mu = mu_0 r^2(t) / 2,
// with phi_0 = 2 gamma n(0) and mu_0 = gamma^2 n(0) = gamma phi_0 / 2.
NonlinearPhases phases_quasistatic(const InteractionParams& params,
                                   const PulseSpec& probe, const PulseSpec& control,
                                   double t);

// Exact convolution forms, deterministic adaptive quadrature.
//   phase_exact = (1/2) phi_0 Int h~(theta) r^2(t - theta tau_r) dtheta
//   mu_exact    = (1/2) mu_0  Int h~(theta)^2 r^2(t - theta tau_r) dtheta
double phase_exact(const ResponseKernel& kernel, const PulseSpec& pulse,
                   double gamma_eff, double t, const QuadControls& ctl = {});
double mu_exact(const ResponseKernel& kernel, const PulseSpec& pulse,
                double gamma_eff, double t, const QuadControls& ctl = {});

// Two-time correlator
//   K(t1, t2) = mu_0 Int h~(t1/tau_r - theta) h~(t2/tau_r - theta)
//                        r^2(theta tau_r) dtheta
// and its quasi-static form mu_0 r^2(t1 + tau/2) g(tau) tau_r, tau = t2 - t1.
double correlator_K_exact(const ResponseKernel& kernel, const PulseSpec& pulse,
                          double gamma_eff, double t1, double t2,
                          const QuadControls& ctl = {});
double correlator_K_quasistatic(const ResponseKernel& kernel, const PulseSpec& pulse,
                                double gamma_eff, double t1, double t2);

}  // namespace kerrsq
