#pragma once

#include <string>
#include <vector>

namespace kerrsq {

enum class EnvelopeShape { gaussian, sech, flat_top, tabulated };

const char* to_string(EnvelopeShape shape);

// Polynomial linear phase varphi(t) = sum_k c_k t^k.
class LinearPhase {
 public:
  LinearPhase() = default;
  explicit LinearPhase(std::vector<double> coefficients);
  static LinearPhase constant(double value);

  double operator()(double t) const noexcept;
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

// Classical description of one input pulse: an envelope r(t) normalized to
// r(0) = 1, the peak photon-number density n(0), and a linear phase. All
// times are in the same units as the kernel relaxation time. Pure value
// type, safe to share across threads.
class PulseSpec {
 public:
  static PulseSpec gaussian(double tau_p, double n_peak, LinearPhase phase = {});
  static PulseSpec sech(double tau_p, double n_peak, LinearPhase phase = {});
  static PulseSpec flat_top(double tau_p, double n_peak, LinearPhase phase = {});
  // Linear interpolation between samples; queries outside the sampled range
  // throw std::out_of_range. Requires r(0) = 1 and r in [0, 1].
  static PulseSpec tabulated(std::vector<double> times, std::vector<double> values,
                             double n_peak, LinearPhase phase = {});
  // Vacuum input (n_peak = 0), used to switch the control channel off.
  static PulseSpec off();

  // Same pulse with a rescaled peak photon-number density.
  PulseSpec with_n_peak(double n_peak) const;

  EnvelopeShape shape() const noexcept { return shape_; }
  double tau_p() const noexcept { return tau_p_; }
  double n_peak() const noexcept { return n_peak_; }

  // r(t) in [0, 1], r(0) = 1. Gaussian default: exp(-t^2 / (2 tau_p^2)).
  double envelope(double t) const;
  // n(t) = n_peak * r(t)^2.
  double photon_density(double t) const;
  double linear_phase(double t) const noexcept { return phase_(t); }
  const LinearPhase& phase() const noexcept { return phase_; }

  // Abscissae where the envelope is non-smooth (flat-top edges, table ends);
  // empty for the analytic shapes.
  std::vector<double> envelope_breakpoints() const;

 private:
  PulseSpec(EnvelopeShape shape, double tau_p, double n_peak, LinearPhase phase);

  EnvelopeShape shape_;
  double tau_p_;
  double n_peak_;
  LinearPhase phase_;
  std::vector<double> tab_t_, tab_r_;
};

}  // namespace kerrsq
