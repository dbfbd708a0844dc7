#include "kerrsq/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kerrsq/errors.hpp"

namespace kerrsq {

const char* to_string(EnvelopeShape shape) {
  switch (shape) {
    case EnvelopeShape::gaussian: return "gaussian";
    case EnvelopeShape::sech: return "sech";
    case EnvelopeShape::flat_top: return "flat-top";
    case EnvelopeShape::tabulated: return "tabulated";
  }
  return "?";
}

LinearPhase::LinearPhase(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw ConfigError("LinearPhase: non-finite coefficient");
}

LinearPhase LinearPhase::constant(double value) {
  return LinearPhase(std::vector<double>{value});
}

double LinearPhase::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PulseSpec::PulseSpec(EnvelopeShape shape, double tau_p, double n_peak, LinearPhase phase)
    : shape_(shape), tau_p_(tau_p), n_peak_(n_peak), phase_(std::move(phase)) {
  if (!(std::isfinite(tau_p) && tau_p > 0.0))
    throw ConfigError("PulseSpec: tau_p must be finite and positive");
  if (!(std::isfinite(n_peak) && n_peak >= 0.0))
    throw ConfigError("PulseSpec: n_peak must be finite and non-negative");
}

PulseSpec PulseSpec::gaussian(double tau_p, double n_peak, LinearPhase phase) {
  return PulseSpec(EnvelopeShape::gaussian, tau_p, n_peak, std::move(phase));
}

PulseSpec PulseSpec::sech(double tau_p, double n_peak, LinearPhase phase) {
  return PulseSpec(EnvelopeShape::sech, tau_p, n_peak, std::move(phase));
}

PulseSpec PulseSpec::flat_top(double tau_p, double n_peak, LinearPhase phase) {
  return PulseSpec(EnvelopeShape::flat_top, tau_p, n_peak, std::move(phase));
}

PulseSpec PulseSpec::tabulated(std::vector<double> times, std::vector<double> values,
                               double n_peak, LinearPhase phase) {
  if (times.size() < 2 || times.size() != values.size())
    throw ConfigError("PulseSpec: tabulated envelope needs matching sample arrays (>= 2)");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw ConfigError("PulseSpec: tabulated sample times must be strictly increasing");
  for (double r : values)
    if (!(r >= 0.0 && r <= 1.0 + 1e-12))
      throw ConfigError("PulseSpec: tabulated envelope values must lie in [0, 1]");
  if (times.front() > 0.0 || times.back() < 0.0)
    throw ConfigError("PulseSpec: tabulated envelope must cover t = 0");

  PulseSpec p(EnvelopeShape::tabulated, times.back() - times.front(), n_peak,
              std::move(phase));
  p.tab_t_ = std::move(times);
  p.tab_r_ = std::move(values);
  if (std::fabs(p.envelope(0.0) - 1.0) > 1e-9)
    throw ConfigError("PulseSpec: tabulated envelope must have r(0) = 1");
  return p;
}

PulseSpec PulseSpec::off() { return gaussian(100.0, 0.0); }

PulseSpec PulseSpec::with_n_peak(double n_peak) const {
  if (!(std::isfinite(n_peak) && n_peak >= 0.0))
    throw ConfigError("PulseSpec: n_peak must be finite and non-negative");
  PulseSpec copy = *this;
  copy.n_peak_ = n_peak;
  return copy;
}

double PulseSpec::envelope(double t) const {
  switch (shape_) {
    case EnvelopeShape::gaussian:
      return std::exp(-t * t / (2.0 * tau_p_ * tau_p_));
    case EnvelopeShape::sech:
      return 1.0 / std::cosh(t / tau_p_);
    case EnvelopeShape::flat_top:
      return std::fabs(t) <= tau_p_ ? 1.0 : 0.0;
    case EnvelopeShape::tabulated: {
      if (t < tab_t_.front() || t > tab_t_.back())
        throw std::out_of_range("PulseSpec: tabulated envelope queried outside its range");
      auto hi = std::lower_bound(tab_t_.begin(), tab_t_.end(), t);
      if (hi == tab_t_.begin()) return tab_r_.front();
      const std::size_t i = static_cast<std::size_t>(hi - tab_t_.begin());
      if (i == tab_t_.size()) return tab_r_.back();
      const double w = (t - tab_t_[i - 1]) / (tab_t_[i] - tab_t_[i - 1]);
      return tab_r_[i - 1] + w * (tab_r_[i] - tab_r_[i - 1]);
    }
  }
  return 0.0;
}

double PulseSpec::photon_density(double t) const {
  const double r = envelope(t);
  return n_peak_ * r * r;
}

std::vector<double> PulseSpec::envelope_breakpoints() const {
  switch (shape_) {
    case EnvelopeShape::flat_top:
      return {-tau_p_, tau_p_};
    case EnvelopeShape::tabulated: {
      std::vector<double> b(tab_t_.begin(), tab_t_.end());
      return b;
    }
    default:
      return {};
  }
}

}  // namespace kerrsq
