#pragma once

#include <string>
#include <utility>
#include <vector>

#include "agint/detector.hpp"
#include "agint/mcsim.hpp"

namespace agint::io {

inline constexpr const char* kSchemaVersion = "1";

// Resolved configuration echoed into every output file, in key order.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// Shortest round-trip decimal form of a double (deterministic).
std::string fmt(double v);

// "# schema_version=1" plus one "# key=value" line per config entry.
std::string csv_preamble(const ConfigEcho& config);

// Generic table: header row plus one CSV line per row of values.
std::string table_csv(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows,
                      const ConfigEcho& config);

// columns: trial_index, n_nodes, interference
std::string campaign_csv(const mcsim::CampaignResult& result,
                         const ConfigEcho& config);

// columns: snr_db, pd
std::string curve_csv(const detector::DetectionCurve& curve,
                      const ConfigEcho& config);

}  // namespace agint::io
