#include "kerrsq/nlo_phase.hpp"

#include <algorithm>
#include <cmath>

#include "kerrsq/errors.hpp"

namespace kerrsq {

namespace {

// Kernel tails fall below any practical absolute tolerance well inside
// 40 relaxation times: exp(-40) ~ 4e-18.
constexpr double kThetaWindow = 40.0;

// Envelope break abscissae mapped into the theta variable of the phase
// integrals, where the envelope is sampled at t - theta * tau_r.
std::vector<double> phase_breakpoints(const PulseSpec& pulse, double t, double tau_r) {
  std::vector<double> bps{0.0};
  for (double edge : pulse.envelope_breakpoints()) bps.push_back((t - edge) / tau_r);
  return bps;
}

}  // namespace

void InteractionParams::validate() const {
  const double vals[] = {gamma1, gamma2, gamma_x};
  for (double g : vals)
    if (!(std::isfinite(g) && g >= 0.0))
      throw ConfigError("InteractionParams: gammas must be finite and non-negative");
}

NonlinearPhases make_phases(double t, double phi1, double phi1x, double phi2x,
                            double mu1, double mu2x, double linear_phase1) {
  NonlinearPhases p;
  p.t = t;
  p.phi1 = phi1;
  p.phi1x = phi1x;
  p.phi2x = phi2x;
  p.mu1 = mu1;
  p.mu2x = mu2x;
  p.linear_phase1 = linear_phase1;
  p.phi_star = phi1 * phi1 + phi1x * phi2x;
  p.Phi_tilde = phi1 + linear_phase1 + phi2x;
  return p;
}

NonlinearPhases with_linear_phase(const NonlinearPhases& ph, double linear_phase1) {
  return make_phases(ph.t, ph.phi1, ph.phi1x, ph.phi2x, ph.mu1, ph.mu2x, linear_phase1);
}

NonlinearPhases phases_quasistatic(const InteractionParams& params,
                                   const PulseSpec& probe, const PulseSpec& control,
                                   double t) {
  params.validate();
  const double n1 = probe.photon_density(t);
  const double n2 = control.photon_density(t);
  return make_phases(t,
                     2.0 * params.gamma1 * n1,
                     2.0 * params.gamma_x * n1,
                     2.0 * params.gamma_x * n2,
                     0.5 * params.gamma1 * params.gamma1 * n1,
                     0.5 * params.gamma_x * params.gamma_x * n2,
                     probe.linear_phase(t));
}

double phase_exact(const ResponseKernel& kernel, const PulseSpec& pulse,
                   double gamma_eff, double t, const QuadControls& ctl) {
  const double phi0 = 2.0 * gamma_eff * pulse.n_peak();
  if (phi0 == 0.0) return 0.0;
  const double tau_r = kernel.tau_r();
  auto integrand = [&](double theta) {
    const double r = pulse.envelope(t - theta * tau_r);
    return kernel.h_tilde(theta) * r * r;
  };
  return 0.5 * phi0 *
         integrate_adaptive(integrand, -kThetaWindow, kThetaWindow, ctl,
                            phase_breakpoints(pulse, t, tau_r));
}

double mu_exact(const ResponseKernel& kernel, const PulseSpec& pulse,
                double gamma_eff, double t, const QuadControls& ctl) {
  const double mu0 = gamma_eff * gamma_eff * pulse.n_peak();
  if (mu0 == 0.0) return 0.0;
  const double tau_r = kernel.tau_r();
  auto integrand = [&](double theta) {
    const double ht = kernel.h_tilde(theta);
    const double r = pulse.envelope(t - theta * tau_r);
    return ht * ht * r * r;
  };
  return 0.5 * mu0 *
         integrate_adaptive(integrand, -kThetaWindow, kThetaWindow, ctl,
                            phase_breakpoints(pulse, t, tau_r));
}

double correlator_K_exact(const ResponseKernel& kernel, const PulseSpec& pulse,
                          double gamma_eff, double t1, double t2,
                          const QuadControls& ctl) {
  const double mu0 = gamma_eff * gamma_eff * pulse.n_peak();
  if (mu0 == 0.0) return 0.0;
  const double tau_r = kernel.tau_r();
  const double th1 = t1 / tau_r;
  const double th2 = t2 / tau_r;
  auto integrand = [&](double theta) {
    const double r = pulse.envelope(theta * tau_r);
    return kernel.h_tilde(th1 - theta) * kernel.h_tilde(th2 - theta) * r * r;
  };
  std::vector<double> bps{th1, th2};
  for (double edge : pulse.envelope_breakpoints()) bps.push_back(edge / tau_r);
  const double lo = std::min(th1, th2) - kThetaWindow;
  const double hi = std::max(th1, th2) + kThetaWindow;
  return mu0 * integrate_adaptive(integrand, lo, hi, ctl, std::move(bps));
}

double correlator_K_quasistatic(const ResponseKernel& kernel, const PulseSpec& pulse,
                                double gamma_eff, double t1, double t2) {
  const double mu0 = gamma_eff * gamma_eff * pulse.n_peak();
  if (mu0 == 0.0) return 0.0;
  const double tau = t2 - t1;
  const double r = pulse.envelope(t1 + 0.5 * tau);
  return mu0 * r * r * kernel.g(tau) * kernel.tau_r();
}

}  // namespace kerrsq
