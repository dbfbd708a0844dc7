#pragma once

#include <string>
#include <vector>

#include "kerrsq/spectra.hpp"

namespace kerrsq {

// Reproduction presets for the seven squeezing-spectrum figure families.
// Shared parameters: gamma1 = gamma2 = 2 gamma_x, phi01 = 2 for the frequency
// scans, gaussian envelopes with tau_p = 100 tau_r, evaluation time t = 0,
// control/probe intensity ratios {0, 2, 3, 5, 8} labelled a..e.
//   Figures 1-3: S_X vs Omega in [0, 3], optimal phase at Omega0 = 0, 0.5, 0.7.
//   Figures 4-6: S_X vs phi01 in (0, 3], measured at Omega = 0, 0.3, 0.5
//                with the phase optimal at Omega0 = 0.
//   Figure 7:    S_X vs phi01 at Omega = Omega0 = 0.5.
struct FigurePreset {
  int number;
  std::string x_name;   // "Omega" or "phi01"
  double Omega;         // analysis frequency for phi01 scans
  double Omega0;        // optimal-phase anchor
  double phi01;         // fixed probe phase shift for Omega scans
  std::vector<double> ratios;
  std::vector<double> x_grid;
};

struct FigureRow {
  std::string curve;  // a..e by intensity ratio
  double x;
  double sx;
};

struct FigureTable {
  FigurePreset preset;
  std::vector<FigureRow> rows;
};

FigurePreset figure_preset(int n);  // throws ConfigError unless n in 1..7
FigureTable run_figure(int n);

// Interaction parameters used by every figure: gamma1 = gamma2 = 0.01,
// gamma_x = 0.005 (so gamma1 = 2 gamma_x), well inside the gamma << 1 regime.
InteractionParams figure_interaction();

// Probe/control pair realizing a given phi01 and intensity ratio under the
// figure interaction parameters.
std::pair<PulseSpec, PulseSpec> figure_pulses(double phi01, double ratio);

}  // namespace kerrsq
