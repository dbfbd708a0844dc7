#include "kerrsq/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrsq/errors.hpp"
#include "kerrsq/parallel.hpp"

namespace kerrsq {

SpectrumPair spectrum_closed(const NonlinearPhases& ph, double Omega,
                             const ResponseKernel& kernel) {
  const double L = kernel.spectral_filter(Omega);
  const double s2 = std::sin(2.0 * ph.Phi_tilde);
  const double s = std::sin(ph.Phi_tilde);
  const double c = std::cos(ph.Phi_tilde);
  const double amp = 4.0 * ph.phi_star * L * L;
  const double sx = 0.25 * (1.0 - 2.0 * ph.phi1 * L * s2 + amp * s * s);
  const double sy = 0.25 * (1.0 + 2.0 * ph.phi1 * L * s2 + amp * c * c);
  return {sx, sy};
}

double optimal_phase(const NonlinearPhases& ph, double Omega0,
                     const ResponseKernel& kernel) {
  if (ph.phi1 == 0.0 && ph.phi_star == 0.0)
    throw std::invalid_argument(
        "optimal_phase: degenerate input (phi1 = phi* = 0), any phase is optimal");
  const double L0 = kernel.spectral_filter(Omega0);
  return 0.5 * std::atan2(ph.phi1, ph.phi_star * L0) - ph.phi1 - ph.phi2x;
}

SpectrumPair spectrum_optimal(const NonlinearPhases& ph, double Omega0,
                              const ResponseKernel& kernel) {
  const double L0 = kernel.spectral_filter(Omega0);
  const double R = std::hypot(ph.phi1, ph.phi_star * L0);
  const double plus = 1.0 + 2.0 * ph.phi_star * L0 * L0 + 2.0 * L0 * R;
  // (1 + 2 phi* L0^2)^2 - (2 L0 R)^2 = 1 + 4 L0^2 phi1x phi2x
  const double sx = 0.25 * (1.0 + 4.0 * L0 * L0 * ph.phi1x * ph.phi2x) / plus;
  const double sy = 0.25 * plus;
  return {sx, sy};
}

SpectrumPair spectrum_at(const NonlinearPhases& ph, double Omega, double Omega0,
                         const ResponseKernel& kernel) {
  const double L = kernel.spectral_filter(Omega);
  const double L0 = kernel.spectral_filter(Omega0);
  const double R = std::hypot(ph.phi1, ph.phi_star * L0);
  if (R == 0.0) return {0.25, 0.25};  // no nonlinearity: flat shot-noise floor
  const SpectrumPair s0 = spectrum_optimal(ph, Omega0, kernel);
  const double common = ph.phi_star * (L + L0);
  const double braced =
      (ph.phi1 * ph.phi1 + ph.phi_star * ph.phi_star * L0 * (L + L0)) / R;
  const double dL = 0.5 * (L - L0);
  return {s0.sx + dL * (common - braced), s0.sy + dL * (common + braced)};
}

void SpectrumRequest::validate() const {
  params.validate();
  if (Omega_grid.empty()) throw ConfigError("SpectrumRequest: Omega_grid is empty");
  double prev = Omega_grid.front();
  for (double w : Omega_grid) {
    if (!std::isfinite(w)) throw ConfigError("SpectrumRequest: non-finite Omega");
    if (w < prev) throw ConfigError("SpectrumRequest: Omega_grid must be sorted ascending");
    prev = w;
  }
  if (!std::isfinite(Omega0)) throw ConfigError("SpectrumRequest: non-finite Omega0");
  if (!std::isfinite(t)) throw ConfigError("SpectrumRequest: non-finite t");
}

std::vector<RegimeWarning> regime_warnings(const SpectrumRequest& rq) {
  std::vector<RegimeWarning> ws;
  auto check_gamma = [&](double g, const char* name) {
    if (g > 0.1)
      ws.push_back({"gamma_large", std::string(name) + " = " + std::to_string(g) +
                                       " exceeds the gamma << 1 validity regime (0.1)"});
  };
  check_gamma(rq.params.gamma1, "gamma1");
  check_gamma(rq.params.gamma2, "gamma2");
  check_gamma(rq.params.gamma_x, "gamma_x");
  const double tr = rq.kernel.tau_r();
  if (rq.probe.tau_p() / tr < 50.0)
    ws.push_back({"quasistatic", "probe tau_p/tau_r < 50, quasi-static forms degrade"});
  if (rq.control.n_peak() > 0.0 && rq.control.tau_p() / tr < 50.0)
    ws.push_back({"quasistatic", "control tau_p/tau_r < 50, quasi-static forms degrade"});
  return ws;
}

SweepAxis parse_sweep_axis(const std::string& name) {
  if (name == "Omega") return SweepAxis::Omega;
  if (name == "Omega0") return SweepAxis::Omega0;
  if (name == "phi01") return SweepAxis::phi01;
  if (name == "intensity_ratio") return SweepAxis::intensity_ratio;
  if (name == "t") return SweepAxis::time;
  throw ConfigError("unknown sweep axis '" + name +
                    "' (expected Omega | Omega0 | phi01 | intensity_ratio | t)");
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Omega: return "Omega";
    case SweepAxis::Omega0: return "Omega0";
    case SweepAxis::phi01: return "phi01";
    case SweepAxis::intensity_ratio: return "intensity_ratio";
    case SweepAxis::time: return "t";
  }
  return "?";
}

namespace {

NonlinearPhases resolved_phases(const SpectrumRequest& rq) {
  NonlinearPhases ph = phases_quasistatic(rq.params, rq.probe, rq.control, rq.t);
  if (rq.phase_mode == PhaseMode::optimal)
    ph = with_linear_phase(ph, optimal_phase(ph, rq.Omega0, rq.kernel));
  return ph;
}

SpectrumPair evaluate(const SpectrumRequest& rq, const NonlinearPhases& ph,
                      double Omega) {
  if (rq.phase_mode == PhaseMode::optimal)
    return spectrum_at(ph, Omega, rq.Omega0, rq.kernel);
  return spectrum_closed(ph, Omega, rq.kernel);
}

// Apply one sweep value, rebuilding pulses where the axis calls for it.
SpectrumRequest with_axis_value(const SpectrumRequest& rq, SweepAxis axis, double v) {
  SpectrumRequest out = rq;
  switch (axis) {
    case SweepAxis::Omega:
      out.Omega_grid = {v};
      break;
    case SweepAxis::Omega0:
      out.Omega0 = v;
      break;
    case SweepAxis::phi01: {
      if (rq.params.gamma1 <= 0.0)
        throw ConfigError("sweep phi01: requires gamma1 > 0");
      if (rq.probe.n_peak() <= 0.0)
        throw ConfigError("sweep phi01: requires a non-vacuum probe");
      const double ratio = rq.control.n_peak() / rq.probe.n_peak();
      const double n1 = v / (2.0 * rq.params.gamma1);
      if (n1 < 0.0) throw ConfigError("sweep phi01: negative phi01 value");
      out.probe = rq.probe.with_n_peak(n1);
      out.control = rq.control.with_n_peak(ratio * n1);
      break;
    }
    case SweepAxis::intensity_ratio: {
      if (v < 0.0) throw ConfigError("sweep intensity_ratio: negative ratio");
      out.control = rq.control.with_n_peak(v * rq.probe.n_peak());
      break;
    }
    case SweepAxis::time:
      out.t = v;
      break;
  }
  return out;
}

void append_density_warnings(SpectrumTable& table) {
  for (const auto& row : table.rows) {
    if (row.sx < 0.0 || row.sy < 0.0) {
      table.warnings.push_back(
          {"negative_spectral_density",
           "S < 0 at Omega = " + std::to_string(row.Omega) +
               " (gamma^2 truncation undershoot); value reported unclamped"});
      break;
    }
  }
}

}  // namespace

SpectrumTable compute_spectrum(const SpectrumRequest& rq) {
  rq.validate();
  SpectrumTable table;
  table.axis_name = "Omega";
  table.warnings = regime_warnings(rq);
  const NonlinearPhases ph = resolved_phases(rq);
  table.rows.resize(rq.Omega_grid.size());
  parallel_for(rq.Omega_grid.size(), [&](std::size_t i) {
    const double w = rq.Omega_grid[i];
    const SpectrumPair s = evaluate(rq, ph, w);
    table.rows[i] = {w, w, s.sx, s.sy};
  });
  append_density_warnings(table);
  return table;
}

SpectrumTable sweep(const SpectrumRequest& rq, SweepAxis axis,
                    const std::vector<double>& values) {
  rq.validate();
  SpectrumTable table;
  table.axis_name = to_string(axis);
  table.warnings = regime_warnings(rq);
  if (values.empty()) return table;

  // Row-major over (value, Omega); axis Omega replaces the grid entirely.
  struct Job {
    double value;
    double Omega;
  };
  std::vector<Job> jobs;
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("sweep: non-finite sweep value");
    if (axis == SweepAxis::Omega) {
      jobs.push_back({v, v});
    } else {
      for (double w : rq.Omega_grid) jobs.push_back({v, w});
    }
  }

  // Per-value request resolution is cached by value index.
  std::vector<SpectrumRequest> reqs;
  std::vector<NonlinearPhases> phases;
  reqs.reserve(values.size());
  for (double v : values) reqs.push_back(with_axis_value(rq, axis, v));
  phases.reserve(values.size());
  for (const auto& r : reqs) phases.push_back(resolved_phases(r));

  const std::size_t per_value = axis == SweepAxis::Omega ? 1 : rq.Omega_grid.size();
  table.rows.resize(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const std::size_t vi = i / per_value;
    const SpectrumPair s = evaluate(reqs[vi], phases[vi], jobs[i].Omega);
    table.rows[i] = {jobs[i].value, jobs[i].Omega, s.sx, s.sy};
  });
  append_density_warnings(table);
  return table;
}

}  // namespace kerrsq
