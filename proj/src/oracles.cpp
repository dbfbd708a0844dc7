#include "kerrsq/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kerrsq/figures.hpp"
#include "kerrsq/fock_oracle.hpp"
#include "kerrsq/parallel.hpp"
#include "kerrsq/quadrature.hpp"
#include "kerrsq/spectra.hpp"

namespace kerrsq {

FourierSmooth fourier_corr_smooth(const NonlinearPhases& ph, const ResponseKernel& kernel,
                                  double Omega, double window, double step) {
  long n = std::lround(2.0 * window / step);
  if (n % 2) ++n;
  const double h = 2.0 * window / static_cast<double>(n);
  const double omega = Omega / kernel.tau_r();

  std::complex<double> accx = 0.0, accy = 0.0;
  for (long i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double tau = -window + h * static_cast<double>(i);
    const auto [X, Y] = corr_R(ph, kernel, tau);
    const std::complex<double> e = std::polar(w, omega * tau);
    accx += X.smooth_value * e;
    accy += Y.smooth_value * e;
  }
  const double scale = h / 3.0;
  return {accx * scale, accy * scale};
}

VerificationReport run_dft_oracle() {
  const ResponseKernel kernel = ResponseKernel::exponential();
  const InteractionParams ip = figure_interaction();
  const std::vector<double> ratios = {0.0, 2.0, 3.0, 5.0, 8.0};
  const double Omega0 = 0.0;

  std::vector<double> omegas;
  for (int i = 0; i <= 60; ++i) omegas.push_back(0.05 * i);

  VerificationReport report;
  for (double ratio : ratios) {
    auto [probe, control] = figure_pulses(2.0, ratio);
    NonlinearPhases ph = phases_quasistatic(ip, probe, control, 0.0);
    ph = with_linear_phase(ph, optimal_phase(ph, Omega0, kernel));

    std::vector<double> dx(omegas.size()), dy(omegas.size()), di(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) {
      const FourierSmooth ft = fourier_corr_smooth(ph, kernel, omegas[i]);
      const SpectrumPair closed = spectrum_closed(ph, omegas[i], kernel);
      dx[i] = std::fabs(0.25 + ft.x.real() - closed.sx);
      dy[i] = std::fabs(0.25 + ft.y.real() - closed.sy);
      di[i] = std::max(std::fabs(ft.x.imag()), std::fabs(ft.y.imag()));
    });
    const std::string tag = "ratio=" + std::to_string(static_cast<int>(ratio));
    report.add_leq("dft/" + tag + "/max_abs_err_Sx", *std::max_element(dx.begin(), dx.end()), 1e-6);
    report.add_leq("dft/" + tag + "/max_abs_err_Sy", *std::max_element(dy.begin(), dy.end()), 1e-6);
    report.add_leq("dft/" + tag + "/max_abs_imag", *std::max_element(di.begin(), di.end()), 1e-9);
  }
  return report;
}

VerificationReport run_convolution_oracle() {
  const ResponseKernel kernel = ResponseKernel::exponential();
  const double gamma = 0.01;
  const std::vector<double> tau_ps = {50.0, 100.0, 200.0, 400.0};

  std::vector<double> phase_err(tau_ps.size()), mu_err(tau_ps.size());
  for (std::size_t i = 0; i < tau_ps.size(); ++i) {
    const double tau_p = tau_ps[i];
    const PulseSpec pulse = PulseSpec::gaussian(tau_p, 100.0);  // phi0 = 2
    double worst_phase = 0.0, worst_mu = 0.0;
    for (double t : {0.0, 0.5 * tau_p, tau_p}) {
      const double pe = phase_exact(kernel, pulse, gamma, t);
      const double pq = 2.0 * gamma * pulse.photon_density(t);
      worst_phase = std::max(worst_phase, std::fabs(pe - pq) / pq);
      const double me = mu_exact(kernel, pulse, gamma, t);
      const double mq = 0.5 * gamma * gamma * pulse.photon_density(t);
      worst_mu = std::max(worst_mu, std::fabs(me - mq) / mq);
    }
    phase_err[i] = worst_phase;
    mu_err[i] = worst_mu;
  }

  VerificationReport report;
  report.add_leq("convolution/tau_p=100/phase_rel_err", phase_err[1], 1e-2);
  report.add_leq("convolution/tau_p=100/mu_rel_err", mu_err[1], 1e-2);
  // largest consecutive step; strictly decreasing errors keep it negative
  double worst_step_phase = phase_err[1] - phase_err[0];
  double worst_step_mu = mu_err[1] - mu_err[0];
  for (std::size_t i = 2; i < tau_ps.size(); ++i) {
    worst_step_phase = std::max(worst_step_phase, phase_err[i] - phase_err[i - 1]);
    worst_step_mu = std::max(worst_step_mu, mu_err[i] - mu_err[i - 1]);
  }
  report.add_leq("convolution/phase_err_monotone_decreasing", worst_step_phase, 0.0);
  report.add_leq("convolution/mu_err_monotone_decreasing", worst_step_mu, 0.0);
  return report;
}

VerificationReport run_fock_oracle() {
  const ResponseKernel kernel = ResponseKernel::exponential();

  ModeLattice probe;
  probe.n_bins = 2;
  probe.dt = 1.0;
  probe.n_max = 12;
  probe.alpha = {{0.9, 0.0}, std::polar(0.6, 0.5)};

  ModeLattice control = probe;
  control.alpha = {std::polar(0.8, -0.3), {0.9, 0.0}};

  const InteractionParams params{0.2, 0.2, 0.1};

  VerificationReport report;
  report.merge(verify_commutator_and_statistics(probe, control, params, kernel),
               "fock/");
  report.merge(verify_truncated_mean(probe, 0.02, kernel), "fock/probe/");
  report.merge(verify_truncated_mean(control, 0.02, kernel), "fock/control/");

  const ExpExpOValue at_gamma = expect_exp_O(probe, params.gamma1, kernel);
  report.add_leq("fock/probe/pp_matrix_vs_closed@gamma=0.2", at_gamma.difference, 1e-10);
  return report;
}

}  // namespace kerrsq
