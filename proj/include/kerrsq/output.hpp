#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kerrsq/figures.hpp"
#include "kerrsq/report.hpp"
#include "kerrsq/spectra.hpp"

namespace kerrsq {

// Numbers are printed with 12 significant digits so identical requests give
// byte-identical files.
std::string format_number(double v);

// '#'-prefixed provenance block (version + flattened parameter echo +
// warnings), then a header row, then data rows.
std::string spectrum_table_csv(const SpectrumTable& table, const nlohmann::json& provenance);
std::string figure_csv(const FigureTable& table, const nlohmann::json& provenance);

nlohmann::json spectrum_table_json(const SpectrumTable& table, const nlohmann::json& provenance);
nlohmann::json report_json(const VerificationReport& report, const nlohmann::json& provenance);

// Writes to the path, or to stdout when path is empty.
void write_text(const std::string& path, const std::string& text);

}  // namespace kerrsq
