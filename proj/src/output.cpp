#include "kerrsq/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "kerrsq/errors.hpp"
#include "kerrsq/version.hpp"

namespace kerrsq {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

void flatten(const nlohmann::json& node, const std::string& path,
             std::vector<std::string>& lines) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), lines);
  } else {
    lines.push_back("# " + path + " = " + node.dump());
  }
}

std::string provenance_block(const nlohmann::json& provenance,
                             const std::vector<RegimeWarning>& warnings) {
  std::string out = "# kerrsq " + std::string(kVersion) + "\n";
  std::vector<std::string> lines;
  flatten(provenance, "", lines);
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out += l + "\n";
  for (const auto& w : warnings) out += "# warning: [" + w.code + "] " + w.message + "\n";
  return out;
}

nlohmann::json warnings_json(const std::vector<RegimeWarning>& warnings) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : warnings) ws.push_back({{"code", w.code}, {"message", w.message}});
  return ws;
}

}  // namespace

std::string spectrum_table_csv(const SpectrumTable& table, const nlohmann::json& provenance) {
  std::string out = provenance_block(provenance, table.warnings);
  const bool axis_is_omega = table.axis_name == "Omega";
  out += axis_is_omega ? "Omega,S_X,S_Y\n" : table.axis_name + ",Omega,S_X,S_Y\n";
  for (const auto& row : table.rows) {
    if (!axis_is_omega) out += format_number(row.axis_value) + ",";
    out += format_number(row.Omega) + "," + format_number(row.sx) + "," +
           format_number(row.sy) + "\n";
  }
  return out;
}

std::string figure_csv(const FigureTable& table, const nlohmann::json& provenance) {
  std::string out = provenance_block(provenance, {});
  out += "curve_label," + table.preset.x_name + ",S_X\n";
  for (const auto& row : table.rows)
    out += row.curve + "," + format_number(row.x) + "," + format_number(row.sx) + "\n";
  return out;
}

nlohmann::json spectrum_table_json(const SpectrumTable& table,
                                   const nlohmann::json& provenance) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r;
    if (table.axis_name != "Omega") r[table.axis_name] = row.axis_value;
    r["Omega"] = row.Omega;
    r["S_X"] = row.sx;
    r["S_Y"] = row.sy;
    rows.push_back(std::move(r));
  }
  return {{"version", kVersion},
          {"provenance", provenance},
          {"warnings", warnings_json(table.warnings)},
          {"rows", rows}};
}

nlohmann::json report_json(const VerificationReport& report,
                           const nlohmann::json& provenance) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"observed", c.observed},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  return {{"version", kVersion},
          {"provenance", provenance},
          {"checks", checks},
          {"pass", report.all_pass()}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw ConfigError("failed writing output file '" + path + "'");
}

}  // namespace kerrsq
