#pragma once

#include <string>

#include "json.hpp"

#include "cyclestab/constructions.hpp"
#include "cyclestab/oracles.hpp"
#include "cyclestab/stability.hpp"

namespace cyclestab {

inline constexpr int kReportVersion = 1;

// All documents share {"report_version", "kind", ...payload...}. The CLI adds
// a sibling "meta" object (timestamps etc.) that determinism comparisons
// strip before comparing bytes.

nlohmann::json layout_to_json(const GkaLayout& layout, const GkaParams& p);
GkaLayout layout_from_json(const nlohmann::json& j, GkaParams* params_out = nullptr);

nlohmann::json trace_to_json(const SaturationTrace& trace, int len);

nlohmann::json report_to_json(const StabilityReport& r);

nlohmann::json extremal_to_json(const ExtremalResult& r);

nlohmann::json scan_to_json(const ConjectureScanResult& r);

std::string stability_csv_header();
std::string stability_csv_row(const StabilityReport& r);

std::string conjecture_csv_header();
std::string conjecture_csv_row(const ConjectureRecord& r);

}  // namespace cyclestab
