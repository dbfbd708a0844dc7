#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kerrsq/fock_oracle.hpp"
#include "kerrsq/spectra.hpp"

namespace kerrsq {

enum class OutputFormat { csv, json };

// Lattice settings for the Fock verification runs, overridable from the
// configuration document.
struct FockRunConfig {
  ModeLattice probe;
  ModeLattice control;
  InteractionParams params{0.2, 0.2, 0.1};
  double mean_gamma = 0.02;  // gamma used for the truncated-mean order check
};

// Fully validated run configuration. `effective` echoes the merged document
// for provenance output.
struct RunConfig {
  SpectrumRequest request;
  SweepAxis sweep_axis = SweepAxis::intensity_ratio;
  std::vector<double> sweep_values;
  FockRunConfig fock;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  nlohmann::json effective;
};

nlohmann::json default_config();

// Strict parse: unknown keys anywhere in the document are rejected, every
// referenced parameter is validated before any computation starts.
RunConfig parse_config(const nlohmann::json& doc);

// Apply a dotted-path override such as "spectra.Omega0=0.5". The value is
// parsed as JSON when possible, else taken as a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

nlohmann::json load_config_file(const std::string& path);

}  // namespace kerrsq
