#include "kerrsq/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "kerrsq/errors.hpp"

namespace kerrsq {

namespace {

using nlohmann::json;

void check_keys(const json& node, const std::string& path,
                const std::set<std::string>& allowed) {
  if (!node.is_object())
    throw ConfigError("config: '" + path + "' must be an object");
  for (auto it = node.begin(); it != node.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("config: unknown key '" +
                        (path.empty() ? it.key() : path + "." + it.key()) + "'");
}

double get_number(const json& node, const std::string& path, const char* key,
                  double fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(key);
  if (!v.is_number()) throw ConfigError("config: '" + path + "." + key + "' must be a number");
  return v.get<double>();
}

std::string get_string(const json& node, const std::string& path, const char* key,
                       const std::string& fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(key);
  if (!v.is_string()) throw ConfigError("config: '" + path + "." + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> get_number_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError("config: '" + path + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError("config: '" + path + "' must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

ResponseKernel parse_kernel(const json& node) {
  check_keys(node, "kernel", {"shape", "tau_r"});
  const std::string shape = get_string(node, "kernel", "shape", "exponential");
  const double tau_r = get_number(node, "kernel", "tau_r", 1.0);
  if (shape == "exponential") return ResponseKernel::exponential(tau_r);
  if (shape == "dirac") return ResponseKernel::dirac();
  throw ConfigError("config: kernel.shape must be 'exponential' or 'dirac'");
}

PulseSpec parse_pulse(const json& node, const std::string& path, double default_n) {
  check_keys(node, path, {"shape", "tau_p", "n_peak", "linear_phase", "samples"});
  const std::string shape = get_string(node, path, "shape", "gaussian");
  const double tau_p = get_number(node, path, "tau_p", 100.0);
  const double n_peak = get_number(node, path, "n_peak", default_n);
  LinearPhase phase;
  if (node.contains("linear_phase"))
    phase = LinearPhase(get_number_array(node.at("linear_phase"), path + ".linear_phase"));

  if (shape == "gaussian") return PulseSpec::gaussian(tau_p, n_peak, phase);
  if (shape == "sech") return PulseSpec::sech(tau_p, n_peak, phase);
  if (shape == "flat-top") return PulseSpec::flat_top(tau_p, n_peak, phase);
  if (shape == "tabulated") {
    if (!node.contains("samples"))
      throw ConfigError("config: " + path + ".samples required for a tabulated shape");
    const json& s = node.at("samples");
    check_keys(s, path + ".samples", {"t", "r"});
    if (!s.contains("t") || !s.contains("r"))
      throw ConfigError("config: " + path + ".samples needs 't' and 'r' arrays");
    return PulseSpec::tabulated(get_number_array(s.at("t"), path + ".samples.t"),
                                get_number_array(s.at("r"), path + ".samples.r"),
                                n_peak, phase);
  }
  throw ConfigError("config: " + path +
                    ".shape must be gaussian | sech | flat-top | tabulated");
}

std::vector<double> parse_omega_grid(const json& v) {
  if (v.is_array()) return get_number_array(v, "spectra.Omega_grid");
  check_keys(v, "spectra.Omega_grid", {"start", "stop", "step"});
  const double start = get_number(v, "spectra.Omega_grid", "start", 0.0);
  const double stop = get_number(v, "spectra.Omega_grid", "stop", 3.0);
  const double step = get_number(v, "spectra.Omega_grid", "step", 0.01);
  if (!(step > 0.0) || stop < start)
    throw ConfigError("config: spectra.Omega_grid needs step > 0 and stop >= start");
  std::vector<double> grid;
  const long n = std::lround((stop - start) / step);
  for (long i = 0; i <= n; ++i) grid.push_back(start + step * static_cast<double>(i));
  return grid;
}

ModeLattice parse_lattice(const json& node, const std::string& path,
                          const ModeLattice& fallback) {
  check_keys(node, path, {"n_bins", "dt", "n_max", "alpha_re", "alpha_im"});
  ModeLattice m = fallback;
  m.n_bins = static_cast<int>(get_number(node, path, "n_bins", fallback.n_bins));
  m.dt = get_number(node, path, "dt", fallback.dt);
  m.n_max = static_cast<int>(get_number(node, path, "n_max", fallback.n_max));
  if (node.contains("alpha_re") || node.contains("alpha_im")) {
    std::vector<double> re(m.n_bins, 0.0), im(m.n_bins, 0.0);
    if (node.contains("alpha_re")) re = get_number_array(node.at("alpha_re"), path + ".alpha_re");
    if (node.contains("alpha_im")) im = get_number_array(node.at("alpha_im"), path + ".alpha_im");
    if (re.size() != im.size())
      throw ConfigError("config: " + path + " alpha_re/alpha_im sizes differ");
    m.alpha.clear();
    for (std::size_t i = 0; i < re.size(); ++i) m.alpha.emplace_back(re[i], im[i]);
  } else if (static_cast<int>(m.alpha.size()) != m.n_bins) {
    m.alpha.assign(m.n_bins, {1.0, 0.0});
  }
  m.validate();
  return m;
}

ModeLattice default_probe_lattice() {
  ModeLattice m;
  m.n_bins = 2;
  m.dt = 1.0;
  m.n_max = 12;
  m.alpha = {{0.9, 0.0}, std::polar(0.6, 0.5)};
  return m;
}

ModeLattice default_control_lattice() {
  ModeLattice m = default_probe_lattice();
  m.alpha = {std::polar(0.8, -0.3), {0.9, 0.0}};
  return m;
}

}  // namespace

json default_config() {
  return json{
      {"kernel", {{"shape", "exponential"}, {"tau_r", 1.0}}},
      {"pulse1", {{"shape", "gaussian"}, {"tau_p", 100.0}, {"n_peak", 100.0},
                  {"linear_phase", json::array({0.0})}}},
      {"pulse2", {{"shape", "gaussian"}, {"tau_p", 100.0}, {"n_peak", 0.0}}},
      {"interaction", {{"gamma1", 0.01}, {"gamma2", 0.01}, {"gamma_x", 0.005}}},
      {"spectra", {{"t", 0.0},
                   {"Omega_grid", {{"start", 0.0}, {"stop", 3.0}, {"step", 0.01}}},
                   {"Omega0", 0.0},
                   {"phase_mode", "optimal"}}},
      {"sweep", {{"axis", "intensity_ratio"},
                 {"values", json::array({0.0, 2.0, 3.0, 5.0, 8.0})}}},
      {"output", {{"path", ""}, {"format", "csv"}}},
  };
}

RunConfig parse_config(const json& doc) {
  check_keys(doc, "", {"kernel", "pulse1", "pulse2", "interaction", "spectra",
                       "sweep", "oracle", "output"});
  RunConfig cfg;
  cfg.effective = doc;
  cfg.effective.erase("output");  // the destination is not part of the computation

  cfg.request.kernel = parse_kernel(doc.value("kernel", json::object()));
  cfg.request.probe = parse_pulse(doc.value("pulse1", json::object()), "pulse1", 100.0);
  cfg.request.control = parse_pulse(doc.value("pulse2", json::object()), "pulse2", 0.0);

  const json inter = doc.value("interaction", json::object());
  check_keys(inter, "interaction", {"gamma1", "gamma2", "gamma_x"});
  cfg.request.params.gamma1 = get_number(inter, "interaction", "gamma1", 0.01);
  cfg.request.params.gamma2 = get_number(inter, "interaction", "gamma2", 0.01);
  cfg.request.params.gamma_x = get_number(inter, "interaction", "gamma_x", 0.005);
  cfg.request.params.validate();

  const json spec = doc.value("spectra", json::object());
  check_keys(spec, "spectra", {"t", "Omega_grid", "Omega0", "phase_mode"});
  // Times are multiples of tau_r in the document; internal times are absolute.
  const double tau_r = cfg.request.kernel.tau_r();
  cfg.request.t = get_number(spec, "spectra", "t", 0.0) * tau_r;
  cfg.request.Omega0 = get_number(spec, "spectra", "Omega0", 0.0);
  cfg.request.Omega_grid =
      spec.contains("Omega_grid")
          ? parse_omega_grid(spec.at("Omega_grid"))
          : parse_omega_grid(json{{"start", 0.0}, {"stop", 3.0}, {"step", 0.01}});
  const std::string mode = get_string(spec, "spectra", "phase_mode", "optimal");
  if (mode == "optimal")
    cfg.request.phase_mode = PhaseMode::optimal;
  else if (mode == "explicit")
    cfg.request.phase_mode = PhaseMode::explicit_phase;
  else
    throw ConfigError("config: spectra.phase_mode must be 'optimal' or 'explicit'");
  cfg.request.validate();

  const json sweep_node = doc.value("sweep", json::object());
  check_keys(sweep_node, "sweep", {"axis", "values"});
  cfg.sweep_axis = parse_sweep_axis(get_string(sweep_node, "sweep", "axis", "intensity_ratio"));
  if (sweep_node.contains("values"))
    cfg.sweep_values = get_number_array(sweep_node.at("values"), "sweep.values");
  else
    cfg.sweep_values = {0.0, 2.0, 3.0, 5.0, 8.0};

  const json oracle_node = doc.value("oracle", json::object());
  check_keys(oracle_node, "oracle", {"fock"});
  cfg.fock.probe = default_probe_lattice();
  cfg.fock.control = default_control_lattice();
  if (oracle_node.contains("fock")) {
    const json& f = oracle_node.at("fock");
    check_keys(f, "oracle.fock", {"probe", "control", "gamma1", "gamma2", "gamma_x",
                                  "mean_gamma"});
    if (f.contains("probe"))
      cfg.fock.probe = parse_lattice(f.at("probe"), "oracle.fock.probe", cfg.fock.probe);
    if (f.contains("control"))
      cfg.fock.control =
          parse_lattice(f.at("control"), "oracle.fock.control", cfg.fock.control);
    cfg.fock.params.gamma1 = get_number(f, "oracle.fock", "gamma1", 0.2);
    cfg.fock.params.gamma2 = get_number(f, "oracle.fock", "gamma2", 0.2);
    cfg.fock.params.gamma_x = get_number(f, "oracle.fock", "gamma_x", 0.1);
    cfg.fock.mean_gamma = get_number(f, "oracle.fock", "mean_gamma", 0.02);
    cfg.fock.params.validate();
  }

  const json out = doc.value("output", json::object());
  check_keys(out, "output", {"path", "format"});
  cfg.output_path = get_string(out, "output", "path", "");
  const std::string fmt = get_string(out, "output", "format", "csv");
  if (fmt == "csv")
    cfg.format = OutputFormat::csv;
  else if (fmt == "json")
    cfg.format = OutputFormat::json;
  else
    throw ConfigError("config: output.format must be 'csv' or 'json'");

  return cfg;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects KEY.PATH=VALUE, got '" + assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  json value;
  try {
    value = json::parse(raw);
  } catch (...) {
    value = raw;  // bare strings are taken literally
  }

  json* node = &doc;
  std::size_t pos = 0;
  for (;;) {
    const auto dot = path.find('.', pos);
    const std::string key = path.substr(pos, dot - pos);
    if (key.empty()) throw ConfigError("--set: empty key segment in '" + path + "'");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    pos = dot + 1;
  }
}

json load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  try {
    return json::parse(f);
  } catch (const std::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace kerrsq
