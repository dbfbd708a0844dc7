#pragma once

#include <string>
#include <vector>

#include "kerrsq/kernel.hpp"
#include "kerrsq/nlo_phase.hpp"
#include "kerrsq/pulse.hpp"

namespace kerrsq {

struct SpectrumPair {
  double sx;
  double sy;
};

// Closed-form fluctuation spectra at reduced frequency Omega = omega tau_r:
//   S_X = 1/4 { 1 - 2 phi1 L sin(2 Phi~) + 4 phi* L^2 sin^2(Phi~) }
//   S_Y = 1/4 { 1 + 2 phi1 L sin(2 Phi~) + 4 phi* L^2 cos^2(Phi~) }
// with L the kernel's spectral filter. The shot-noise floor 1/4 is recovered
// exactly when all nonlinear phases vanish.
SpectrumPair spectrum_closed(const NonlinearPhases& ph, double Omega,
                             const ResponseKernel& kernel = ResponseKernel::exponential());

// Probe linear phase minimizing S_X at the anchor frequency Omega0:
//   varphi_opt = 1/2 arctan(phi1 / (phi* L0)) - phi1 - phi2x
// (principal branch; atan2 handles the L0 -> 0 and phi1 -> 0 limits).
// Throws std::invalid_argument when phi1 = phi* = 0 (any phase is optimal).
double optimal_phase(const NonlinearPhases& ph, double Omega0,
                     const ResponseKernel& kernel = ResponseKernel::exponential());

// Spectra at the anchor with the optimal phase substituted:
//   S0_X = 1/4 { 1 + 2 phi* L0^2 - 2 L0 sqrt(phi1^2 + phi*^2 L0^2) }
//   S0_Y = 1/4 { 1 + 2 phi* L0^2 + 2 L0 sqrt(phi1^2 + phi*^2 L0^2) }
// S0_X is evaluated in the cancellation-free form
//   (1 + 4 L0^2 phi1x phi2x) / (1 + 2 phi* L0^2 + 2 L0 R),
// using (1 + 2 phi* L0^2)^2 - (2 L0 R)^2 = 1 + 4 L0^2 phi1x phi2x.
SpectrumPair spectrum_optimal(const NonlinearPhases& ph, double Omega0,
                              const ResponseKernel& kernel = ResponseKernel::exponential());

// Spectra at any frequency Omega with the phase held optimal for Omega0:
//   S(Omega) = S0(Omega0) + 1/2 [L - L0] { phi* (L + L0)
//              -/+ [phi1^2 + phi*^2 L0 (L + L0)] / sqrt(phi1^2 + phi*^2 L0^2) }.
// Degenerate zero-nonlinearity input returns the shot-noise floor (1/4, 1/4).
SpectrumPair spectrum_at(const NonlinearPhases& ph, double Omega, double Omega0,
                         const ResponseKernel& kernel = ResponseKernel::exponential());

enum class PhaseMode { explicit_phase, optimal };

struct RegimeWarning {
  std::string code;
  std::string message;
};

// One spectrum evaluation request. Omega_grid must be non-empty, finite and
// sorted ascending. In optimal mode the probe's linear phase is replaced by
// optimal_phase(Omega0); in explicit mode the pulse's own phase is used.
struct SpectrumRequest {
  InteractionParams params;
  PulseSpec probe = PulseSpec::gaussian(100.0, 1.0);
  PulseSpec control = PulseSpec::off();
  double t = 0.0;
  std::vector<double> Omega_grid;
  double Omega0 = 0.0;
  PhaseMode phase_mode = PhaseMode::explicit_phase;
  ResponseKernel kernel = ResponseKernel::exponential();

  void validate() const;  // throws ConfigError
};

// Soft validity checks: gamma > 0.1, tau_p/tau_r < 50, negative spectral
// densities. Reported as structured metadata, never clamped.
std::vector<RegimeWarning> regime_warnings(const SpectrumRequest& rq);

struct SpectrumRow {
  double axis_value;
  double Omega;
  double sx;
  double sy;
};

struct SpectrumTable {
  std::string axis_name;
  std::vector<SpectrumRow> rows;
  std::vector<RegimeWarning> warnings;
};

enum class SweepAxis { Omega, Omega0, phi01, intensity_ratio, time };

SweepAxis parse_sweep_axis(const std::string& name);  // ConfigError on unknown
const char* to_string(SweepAxis axis);

// Spectra over the request's Omega grid; axis_value column repeats Omega.
SpectrumTable compute_spectrum(const SpectrumRequest& rq);

// Dense deterministic table, row-major over (value, Omega). Rows are computed
// in parallel but always emitted in request order, so the table is identical
// for any worker count. Sweeping phi01 rescales the probe peak density at
// fixed gamma1 and keeps the control/probe intensity ratio.
SpectrumTable sweep(const SpectrumRequest& rq, SweepAxis axis,
                    const std::vector<double>& values);

}  // namespace kerrsq
