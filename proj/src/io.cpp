#include "agint/io.hpp"

#include <charconv>
#include <cmath>

namespace agint::io {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_preamble(const ConfigEcho& config) {
    std::string out = "# schema_version=";
    out += kSchemaVersion;
    out += '\n';
    for (const auto& [key, value] : config) {
        out += "# ";
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

std::string table_csv(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows,
                      const ConfigEcho& config) {
    std::string out = csv_preamble(config);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += fmt(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string campaign_csv(const mcsim::CampaignResult& result,
                         const ConfigEcho& config) {
    std::string out = csv_preamble(config);
    out += "trial_index,n_nodes,interference\n";
    for (std::size_t i = 0; i < result.samples.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(result.n_nodes[i]);
        out += ',';
        out += fmt(result.samples[i]);
        out += '\n';
    }
    return out;
}

std::string curve_csv(const detector::DetectionCurve& curve,
                      const ConfigEcho& config) {
    std::string out = csv_preamble(config);
    out += "snr_db,pd\n";
    for (std::size_t i = 0; i < curve.snr_db.size(); ++i) {
        out += fmt(curve.snr_db[i]);
        out += ',';
        out += fmt(curve.pd[i]);
        out += '\n';
    }
    return out;
}

}  // namespace agint::io
