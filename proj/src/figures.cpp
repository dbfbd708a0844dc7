#include "kerrsq/figures.hpp"

#include <cmath>

#include "kerrsq/errors.hpp"

namespace kerrsq {

namespace {

std::vector<double> linspace_step(double lo, double hi, double step) {
  std::vector<double> xs;
  const long n = std::lround((hi - lo) / step);
  xs.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) xs.push_back(lo + step * static_cast<double>(i));
  return xs;
}

const char* curve_label(std::size_t ratio_index) {
  static const char* kLabels[] = {"a", "b", "c", "d", "e"};
  return kLabels[ratio_index];
}

}  // namespace

InteractionParams figure_interaction() { return {0.01, 0.01, 0.005}; }

std::pair<PulseSpec, PulseSpec> figure_pulses(double phi01, double ratio) {
  const InteractionParams ip = figure_interaction();
  const double n1 = phi01 / (2.0 * ip.gamma1);
  return {PulseSpec::gaussian(100.0, n1), PulseSpec::gaussian(100.0, ratio * n1)};
}

FigurePreset figure_preset(int n) {
  if (n < 1 || n > 7) throw ConfigError("figure: n must be in 1..7");
  FigurePreset p;
  p.number = n;
  p.ratios = {0.0, 2.0, 3.0, 5.0, 8.0};
  if (n <= 3) {
    p.x_name = "Omega";
    p.phi01 = 2.0;
    p.Omega = 0.0;  // unused for Omega scans
    p.Omega0 = (n == 1) ? 0.0 : (n == 2 ? 0.5 : 0.7);
    p.x_grid = linspace_step(0.0, 3.0, 0.01);
  } else {
    p.x_name = "phi01";
    p.phi01 = 0.0;  // swept
    if (n == 7) {
      p.Omega = 0.5;
      p.Omega0 = 0.5;
    } else {
      p.Omega = (n == 4) ? 0.0 : (n == 5 ? 0.3 : 0.5);
      p.Omega0 = 0.0;
    }
    p.x_grid = linspace_step(0.01, 3.0, 0.01);
  }
  return p;
}

FigureTable run_figure(int n) {
  const FigurePreset preset = figure_preset(n);
  const InteractionParams ip = figure_interaction();
  const ResponseKernel kernel = ResponseKernel::exponential();

  FigureTable table;
  table.preset = preset;
  table.rows.reserve(preset.ratios.size() * preset.x_grid.size());

  for (std::size_t ri = 0; ri < preset.ratios.size(); ++ri) {
    const double ratio = preset.ratios[ri];
    for (double x : preset.x_grid) {
      const double phi01 = (n <= 3) ? preset.phi01 : x;
      const double Omega = (n <= 3) ? x : preset.Omega;
      auto [probe, control] = figure_pulses(phi01, ratio);
      const NonlinearPhases ph = phases_quasistatic(ip, probe, control, 0.0);
      const SpectrumPair s = spectrum_at(ph, Omega, preset.Omega0, kernel);
      table.rows.push_back({curve_label(ri), x, s.sx});
    }
  }
  return table;
}

}  // namespace kerrsq
