#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kerrsq/config.hpp"
#include "kerrsq/errors.hpp"
#include "kerrsq/figures.hpp"
#include "kerrsq/oracles.hpp"
#include "kerrsq/output.hpp"
#include "kerrsq/spectra.hpp"
#include "kerrsq/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitOracleFail = 3;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_path;  // overrides output.path
};

kerrsq::RunConfig resolve_config(const CommonOpts& opts) {
  nlohmann::json doc = kerrsq::default_config();
  if (!opts.config_path.empty()) {
    const nlohmann::json user = kerrsq::load_config_file(opts.config_path);
    doc.merge_patch(user);
  }
  for (const auto& o : opts.overrides) kerrsq::apply_override(doc, o);
  if (!opts.output_path.empty()) doc["output"]["path"] = opts.output_path;
  return kerrsq::parse_config(doc);
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-c,--config", opts.config_path, "JSON configuration document");
  cmd->add_option("--set", opts.overrides,
                  "Override a config leaf, dotted path (e.g. spectra.Omega0=0.5)");
  cmd->add_option("-o,--output", opts.output_path, "Output file (default: stdout)");
}

void emit_table(const kerrsq::RunConfig& cfg, const kerrsq::SpectrumTable& table) {
  if (cfg.format == kerrsq::OutputFormat::csv)
    kerrsq::write_text(cfg.output_path, kerrsq::spectrum_table_csv(table, cfg.effective));
  else
    kerrsq::write_text(cfg.output_path,
                       kerrsq::spectrum_table_json(table, cfg.effective).dump(2) + "\n");
}

int run_spectrum(const CommonOpts& opts) {
  const kerrsq::RunConfig cfg = resolve_config(opts);
  emit_table(cfg, kerrsq::compute_spectrum(cfg.request));
  return kExitOk;
}

int run_optimal_phase(const CommonOpts& opts) {
  const kerrsq::RunConfig cfg = resolve_config(opts);
  const auto& rq = cfg.request;
  const kerrsq::NonlinearPhases ph =
      kerrsq::phases_quasistatic(rq.params, rq.probe, rq.control, rq.t);
  const double phi = kerrsq::optimal_phase(ph, rq.Omega0, rq.kernel);
  const kerrsq::SpectrumPair s0 = kerrsq::spectrum_optimal(ph, rq.Omega0, rq.kernel);

  if (cfg.format == kerrsq::OutputFormat::csv) {
    std::string out = "Omega0,phi_optimal,S0_X,S0_Y\n";
    out += kerrsq::format_number(rq.Omega0) + "," + kerrsq::format_number(phi) + "," +
           kerrsq::format_number(s0.sx) + "," + kerrsq::format_number(s0.sy) + "\n";
    kerrsq::write_text(cfg.output_path, out);
  } else {
    nlohmann::json j{{"version", kerrsq::kVersion},
                     {"provenance", cfg.effective},
                     {"Omega0", rq.Omega0},
                     {"phi_optimal", phi},
                     {"S0_X", s0.sx},
                     {"S0_Y", s0.sy}};
    kerrsq::write_text(cfg.output_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

int run_sweep(const CommonOpts& opts) {
  const kerrsq::RunConfig cfg = resolve_config(opts);
  emit_table(cfg, kerrsq::sweep(cfg.request, cfg.sweep_axis, cfg.sweep_values));
  return kExitOk;
}

int run_figure_cmd(int n, const std::string& out_dir) {
  const kerrsq::FigureTable table = kerrsq::run_figure(n);
  nlohmann::json provenance{
      {"figure", n},
      {"x", table.preset.x_name},
      {"Omega", table.preset.Omega},
      {"Omega0", table.preset.Omega0},
      {"phi01", table.preset.phi01},
      {"ratios", table.preset.ratios},
      {"gamma1", kerrsq::figure_interaction().gamma1},
      {"gamma2", kerrsq::figure_interaction().gamma2},
      {"gamma_x", kerrsq::figure_interaction().gamma_x},
      {"envelope", "gaussian"},
      {"tau_p", 100.0},
      {"t", 0.0},
  };
  const std::string path = out_dir + "/fig" + std::to_string(n) + ".csv";
  kerrsq::write_text(path, kerrsq::figure_csv(table, provenance));
  std::cerr << "wrote " << path << "\n";
  return kExitOk;
}

int run_oracle(const std::string& kind, const CommonOpts& opts) {
  const kerrsq::RunConfig cfg = resolve_config(opts);
  kerrsq::VerificationReport report;
  if (kind == "dft") {
    report = kerrsq::run_dft_oracle();
  } else if (kind == "convolution") {
    report = kerrsq::run_convolution_oracle();
  } else if (kind == "fock") {
    report.merge(kerrsq::verify_commutator_and_statistics(
                     cfg.fock.probe, cfg.fock.control, cfg.fock.params, cfg.request.kernel),
                 "fock/");
    report.merge(
        kerrsq::verify_truncated_mean(cfg.fock.probe, cfg.fock.mean_gamma, cfg.request.kernel),
        "fock/probe/");
    report.merge(kerrsq::verify_truncated_mean(cfg.fock.control, cfg.fock.mean_gamma,
                                               cfg.request.kernel),
                 "fock/control/");
  } else {
    throw kerrsq::ConfigError("oracle kind must be dft | convolution | fock");
  }
  kerrsq::write_text(cfg.output_path,
                     kerrsq::report_json(report, cfg.effective).dump(2) + "\n");
  return report.all_pass() ? kExitOk : kExitOracleFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadrature fluctuation spectra of a probe pulse under combined "
               "SPM and XPM in an inertial Kerr medium"};
  app.set_version_flag("--version", kerrsq::kVersion);
  app.require_subcommand(1);

  CommonOpts spectrum_opts, phase_opts, sweep_opts, oracle_opts;
  int figure_n = 1;
  std::string figure_dir = ".";
  std::string oracle_kind;

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "S_X/S_Y over the Omega grid");
  add_common(c_spectrum, spectrum_opts);
  CLI::App* c_phase = app.add_subcommand("optimal-phase",
                                         "Optimal probe phase and spectra at Omega0");
  add_common(c_phase, phase_opts);
  CLI::App* c_sweep = app.add_subcommand("sweep", "Parameter sweep table");
  add_common(c_sweep, sweep_opts);
  CLI::App* c_figure = app.add_subcommand("figure", "Reproduce figure family n (1..7)");
  c_figure->add_option("n", figure_n, "Figure number 1..7")->required();
  c_figure->add_option("--out-dir", figure_dir, "Directory for figN.csv");
  CLI::App* c_oracle = app.add_subcommand("oracle", "Run a verification oracle");
  c_oracle->add_option("kind", oracle_kind, "dft | convolution | fock")->required();
  add_common(c_oracle, oracle_opts);

  try {
    app.parse(argc, argv);
    if (c_spectrum->parsed()) return run_spectrum(spectrum_opts);
    if (c_phase->parsed()) return run_optimal_phase(phase_opts);
    if (c_sweep->parsed()) return run_sweep(sweep_opts);
    if (c_figure->parsed()) return run_figure_cmd(figure_n, figure_dir);
    if (c_oracle->parsed()) return run_oracle(oracle_kind, oracle_opts);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const kerrsq::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const kerrsq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
