// Command-line front end: analytic quantities (pdf/cdf/mean/entropy),
// Monte Carlo campaigns, the validation suite, and the detector experiment.
//
// Exit codes: 0 ok, 2 config/geometry error, 3 validation failure,
// 4 numerical non-convergence.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agint/analytic.hpp"
#include "agint/detector.hpp"
#include "agint/errors.hpp"
#include "agint/geometry.hpp"
#include "agint/io.hpp"
#include "agint/ltinv.hpp"
#include "agint/mcsim.hpp"
#include "agint/validate.hpp"

namespace {

using agint::config_error;
using agint::io::ConfigEcho;
using agint::io::fmt;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;
constexpr int kExitConvergence = 4;

// ---------------------------------------------------------------------
// Config file: "key = value" lines, '#' comments. Flags override file
// values; unknown keys are rejected with the exact key path.

struct KeyBinding {
    CLI::Option* flag;  // file value applies only when the flag was absent
    std::function<void(const std::string&)> set;
};
using KeyMap = std::map<std::string, KeyBinding>;

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "': not a number: '" + v +
                           "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const auto x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "': not an integer: '" +
                           v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw config_error("config: key '" + key + "': not a boolean: '" + v +
                       "'");
}

void apply_config_file(const std::string& path, const KeyMap& keys) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string()
                                          : s.substr(b, e - b + 1);
        };
        if (eq == std::string::npos) {
            if (!trim(line).empty())
                throw config_error("config: " + path + ":" +
                                   std::to_string(lineno) +
                                   ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = keys.find(key);
        if (it == keys.end())
            throw config_error("config: unknown key '" + key + "' (" + path +
                               ":" + std::to_string(lineno) + ")");
        if (it->second.flag != nullptr && it->second.flag->count() > 0)
            continue;  // command-line flag wins
        it->second.set(value);
    }
}

// ---------------------------------------------------------------------
// Shared model/law options.

struct ModelArgs {
    double alpha = 4.0;
    double k = 1.0;
    double lambda = 0.05;
    agint::geom::RegionSpec region{10.5, 0.0, 0.0, 0.01};
    std::string fading = "rayleigh";
    double mean_power = 1.0;

    // Set when the value arrived via flag or config file.
    bool k_given = false;
    bool lambda_given = false;
    CLI::Option* k_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;

    bool has_k() const { return k_given || k_opt->count() > 0; }
    bool has_model() const { return lambda_given || lambda_opt->count() > 0; }
};

void add_model_options(CLI::App* cmd, ModelArgs& m, KeyMap& keys) {
    auto* alpha = cmd->add_option(
        "--alpha", m.alpha, "path-loss exponent (dimensionless, > 2; "
        "alpha = 2 is the point-mass boundary case)");
    m.k_opt = cmd->add_option(
        "--k", m.k, "stable scale constant K of the law exp(-K s^eta) "
        "(dimensionless); give either this or the model group");
    m.lambda_opt = cmd->add_option(
        "--lambda", m.lambda,
        "node density (nodes per unit area); enables the model group");
    auto* rmax = cmd->add_option("--rmax", m.region.r_max,
                                 "network radius r_max (length units)");
    auto* rp = cmd->add_option(
        "--rp", m.region.r_p, "protection radius r_p (length units, >= 0)");
    auto* rdec = cmd->add_option(
        "--rdec", m.region.r_dec,
        "distance from the victim to the protection center (length units)");
    auto* eps = cmd->add_option(
        "--epsilon", m.region.epsilon,
        "truncation-rule factor epsilon in (0,1): requires "
        "r_max^(2-alpha) < epsilon");
    auto* fading = cmd->add_option("--fading", m.fading,
                                   "fading model: rayleigh | none")
                       ->check(CLI::IsMember({"rayleigh", "none"}));
    auto* mp = cmd->add_option("--mean-power", m.mean_power,
                               "mean fading power gain E(h) (dimensionless)");

    keys["model.alpha"] = {alpha, [&m](const std::string& v) {
                               m.alpha = parse_double("model.alpha", v);
                           }};
    keys["model.k"] = {m.k_opt, [&m](const std::string& v) {
                           m.k = parse_double("model.k", v);
                           m.k_given = true;
                       }};
    keys["model.lambda"] = {m.lambda_opt, [&m](const std::string& v) {
                                m.lambda = parse_double("model.lambda", v);
                                m.lambda_given = true;
                            }};
    keys["region.r_max"] = {rmax, [&m](const std::string& v) {
                                m.region.r_max =
                                    parse_double("region.r_max", v);
                            }};
    keys["region.r_p"] = {rp, [&m](const std::string& v) {
                              m.region.r_p = parse_double("region.r_p", v);
                          }};
    keys["region.r_dec"] = {rdec, [&m](const std::string& v) {
                                m.region.r_dec =
                                    parse_double("region.r_dec", v);
                            }};
    keys["region.epsilon"] = {eps, [&m](const std::string& v) {
                                  m.region.epsilon =
                                      parse_double("region.epsilon", v);
                              }};
    keys["fading.kind"] = {fading, [&m](const std::string& v) {
                               if (v != "rayleigh" && v != "none")
                                   throw config_error(
                                       "config: key 'fading.kind': expected "
                                       "rayleigh|none, got '" +
                                       v + "'");
                               m.fading = v;
                           }};
    keys["fading.mean_power"] = {mp, [&m](const std::string& v) {
                                     m.mean_power =
                                         parse_double("fading.mean_power", v);
                                 }};
}

agint::analytic::InterferenceModel build_model(const ModelArgs& m) {
    agint::analytic::InterferenceModel model;
    model.alpha = m.alpha;
    model.lambda = m.lambda;
    model.region = m.region;
    model.fading = {m.fading == "rayleigh"
                        ? agint::analytic::FadingKind::rayleigh
                        : agint::analytic::FadingKind::none,
                    m.mean_power};
    return model;
}

// Resolve (K, eta) from either --k or the (lambda, geometry) group.
agint::analytic::StableLaw resolve_law(const ModelArgs& m, ConfigEcho& echo) {
    const bool has_k = m.has_k();
    const bool has_model = m.has_model();
    if (has_k == has_model)
        throw config_error(
            "give exactly one of --k or the model group (--lambda with "
            "geometry flags)");
    echo.emplace_back("model.alpha", fmt(m.alpha));
    if (has_k) {
        if (!(m.alpha > 0.0) || 2.0 / m.alpha > 1.0)
            throw config_error("model: alpha must be >= 2");
        echo.emplace_back("model.k", fmt(m.k));
        return {m.k, 2.0 / m.alpha};
    }
    const auto model = build_model(m);
    const auto law = agint::analytic::compute_k(model);
    echo.emplace_back("model.lambda", fmt(m.lambda));
    echo.emplace_back("region.r_max", fmt(m.region.r_max));
    echo.emplace_back("region.r_p", fmt(m.region.r_p));
    echo.emplace_back("region.r_dec", fmt(m.region.r_dec));
    echo.emplace_back("region.epsilon", fmt(m.region.epsilon));
    echo.emplace_back("fading.kind", m.fading);
    echo.emplace_back("fading.mean_power", fmt(m.mean_power));
    echo.emplace_back("model.k", fmt(law.k));
    return law;
}

// ---------------------------------------------------------------------
// Grids and output plumbing.

std::vector<double> parse_log_grid(const std::string& spec) {
    double lo, hi;
    int n;
    char c1, c2;
    std::istringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' ||
        ss.rdbuf()->in_avail() != 0 || !(lo > 0.0) || !(hi > lo) || n < 2)
        throw config_error("grid spec must be lo:hi:count with 0 < lo < hi, "
                           "count >= 2; got '" + spec + "'");
    std::vector<double> out(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo * std::exp(i * step);
    return out;
}

std::vector<double> parse_linear_grid(const std::string& spec) {
    double lo, hi, step;
    char c1, c2;
    std::istringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        ss.rdbuf()->in_avail() != 0 || !(step > 0.0) || hi < lo)
        throw config_error(
            "grid spec must be start:stop:step with step > 0; got '" + spec +
            "'");
    std::vector<double> out;
    for (double x = lo; x <= hi + 1e-9 * step; x += step) out.push_back(x);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open output file '" + path + "'");
    out << text;
}

json echo_to_json(const ConfigEcho& echo) {
    json j = json::object();
    for (const auto& [k, v] : echo) j[k] = v;
    return j;
}

// ---------------------------------------------------------------------
// Subcommand state + runners.

struct TableArgs {
    ModelArgs model;
    std::vector<double> points;
    std::string grid;
    std::string output;
    bool paper_literal = false;
    bool oracle = false;
    agint::ltinv::InversionConfig inversion;
};

void add_inversion_options(CLI::App* cmd, agint::ltinv::InversionConfig& cfg,
                           KeyMap& keys) {
    auto* tn = cmd->add_option("--talbot-nodes", cfg.talbot_nodes,
                               "fixed-Talbot node count (>= 8)");
    auto* en = cmd->add_option("--euler-nodes", cfg.euler_nodes,
                               "Euler-summation node count (>= 8)");
    auto* pt = cmd->add_option("--precision-target", cfg.precision_target,
                               "inversion relative precision target");
    keys["inversion.talbot_nodes"] = {
        tn, [&cfg](const std::string& v) {
            cfg.talbot_nodes =
                static_cast<int>(parse_u64("inversion.talbot_nodes", v));
        }};
    keys["inversion.euler_nodes"] = {
        en, [&cfg](const std::string& v) {
            cfg.euler_nodes =
                static_cast<int>(parse_u64("inversion.euler_nodes", v));
        }};
    keys["inversion.precision_target"] = {
        pt, [&cfg](const std::string& v) {
            cfg.precision_target = parse_double("inversion.precision_target", v);
        }};
}

std::vector<double> evaluation_points(const TableArgs& a, double scale,
                                      const char* what) {
    std::vector<double> pts = a.points;
    if (!a.grid.empty()) {
        const auto g = parse_log_grid(a.grid);
        pts.insert(pts.end(), g.begin(), g.end());
    }
    if (pts.empty()) {
        // Default grid spanning the law's natural scale.
        for (double r : parse_log_grid(fmt(0.05 * scale) + ":" +
                                       fmt(100.0 * scale) + ":50"))
            pts.push_back(r);
    }
    for (double p : pts)
        if (!(p > 0.0))
            throw config_error(std::string(what) + " points must be > 0");
    return pts;
}

int run_table(const TableArgs& a, const std::string& kind) {
    ConfigEcho echo;
    echo.emplace_back("command", kind);
    const auto law = resolve_law(a.model, echo);
    if (law.eta == 1.0 && kind != "mean") {
        std::cerr << "alpha = 2: the law is a point mass at K = " << fmt(law.k)
                  << "; there is no density (cdf steps at K, mean is K when "
                     "K <= r_max)\n";
        return kExitConfig;
    }
    if (a.paper_literal && kind == "pdf" &&
        !(std::abs(a.model.alpha - 3.0) < 1e-9 ||
          std::abs(a.model.alpha - 4.0) < 1e-9 ||
          std::abs(a.model.alpha - 6.0) < 1e-9))
        throw config_error(
            "--paper-literal: printed density branches exist only for alpha "
            "in {3, 4, 6}");

    const double scale = std::pow(law.k, 1.0 / law.eta);
    const auto pts = evaluation_points(a, scale, kind.c_str());

    std::vector<std::string> cols;
    std::vector<std::vector<double>> rows;
    bool oracle_violation = false;

    if (kind == "pdf") {
        cols = {"r", "pdf_canonical"};
        if (a.paper_literal) cols.push_back("pdf_paper_literal");
        if (a.oracle) cols.push_back("pdf_ltinv");
        for (double r : pts) {
            std::vector<double> row{r,
                                    agint::analytic::pdf(law, r, a.inversion)};
            if (a.paper_literal)
                row.push_back(agint::analytic::pdf_paper_literal(a.model.alpha,
                                                                 law.k, r));
            if (a.oracle) {
                const double inv = agint::ltinv::invert_stable(
                    law.k, law.eta, r, a.inversion);
                row.push_back(inv);
                if (row[1] > 1e-12 &&
                    std::abs(row[1] - inv) > 1e-6 * row[1])
                    oracle_violation = true;
            }
            rows.push_back(std::move(row));
        }
    } else if (kind == "cdf") {
        cols = {"r", "cdf"};
        for (double r : pts)
            rows.push_back({r, agint::analytic::cdf(law, r, a.inversion)});
    } else {  // mean
        cols = {"r_max", "mean_canonical"};
        if (a.paper_literal) cols.push_back("mean_paper_literal");
        for (double rm : pts) {
            std::vector<double> row{
                rm, agint::analytic::truncated_mean(law, rm, a.inversion)};
            if (a.paper_literal) {
                try {
                    row.push_back(agint::analytic::truncated_mean_paper(
                        a.model.alpha, law.k, rm));
                } catch (const agint::math_domain_error& ex) {
                    std::cerr << "mean_paper_literal at r_max=" << fmt(rm)
                              << ": " << ex.what() << '\n';
                    row.push_back(std::numeric_limits<double>::quiet_NaN());
                }
            }
            rows.push_back(std::move(row));
        }
    }

    write_text(a.output, agint::io::table_csv(cols, rows, echo));
    if (oracle_violation) {
        std::cerr << "oracle disagreement: closed form vs inversion beyond "
                     "1e-6 relative\n";
        return kExitValidation;
    }
    return kExitOk;
}

int run_entropy(const TableArgs& a) {
    ConfigEcho echo;
    echo.emplace_back("command", "entropy");
    const auto law = resolve_law(a.model, echo);
    if (law.eta == 1.0) {
        std::cerr << "alpha = 2: point mass at K; the uncertainty functional "
                     "diverges\n";
        return kExitConfig;
    }
    const double delta = agint::analytic::uncertainty(law, a.inversion);
    write_text(a.output,
               agint::io::table_csv({"k", "eta", "uncertainty", "entropy"},
                                    {{law.k, law.eta, delta, -delta}}, echo));
    return kExitOk;
}

struct CampaignArgs {
    ModelArgs model;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    double tx_power = 1.0;
    std::string format = "csv";
    std::string output;
};

int run_campaign_cmd(const CampaignArgs& a) {
    if (!a.model.has_model() || a.model.has_k())
        throw config_error(
            "campaign: needs the model group (--lambda with geometry), not "
            "--k");
    agint::mcsim::CampaignParams params;
    params.model = build_model(a.model);
    params.n_trials = a.trials;
    params.seed = a.seed;
    params.tx_power = a.tx_power;
    const auto result = agint::mcsim::run_campaign(params);

    ConfigEcho echo;
    echo.emplace_back("command", "campaign");
    echo.emplace_back("model.alpha", fmt(a.model.alpha));
    echo.emplace_back("model.lambda", fmt(a.model.lambda));
    echo.emplace_back("region.r_max", fmt(a.model.region.r_max));
    echo.emplace_back("region.r_p", fmt(a.model.region.r_p));
    echo.emplace_back("region.r_dec", fmt(a.model.region.r_dec));
    echo.emplace_back("region.epsilon", fmt(a.model.region.epsilon));
    echo.emplace_back("fading.kind", a.model.fading);
    echo.emplace_back("fading.mean_power", fmt(a.model.mean_power));
    echo.emplace_back("campaign.trials", std::to_string(a.trials));
    echo.emplace_back("campaign.seed", std::to_string(result.seed_used));
    echo.emplace_back("campaign.tx_power", fmt(a.tx_power));
    echo.emplace_back("campaign.rng", result.rng_name);

    if (a.format == "csv") {
        write_text(a.output, agint::io::campaign_csv(result, echo));
        return kExitOk;
    }
    json j;
    j["schema_version"] = agint::io::kSchemaVersion;
    j["config"] = echo_to_json(echo);
    j["seed_used"] = result.seed_used;
    j["rng"] = result.rng_name;
    j["n_nodes_mean"] = result.n_nodes_mean;
    auto sorted = result.samples;
    std::sort(sorted.begin(), sorted.end());
    json q = json::object();
    for (double p : {0.05, 0.25, 0.5, 0.75, 0.95, 0.99}) {
        const auto idx = static_cast<std::size_t>(p * (sorted.size() - 1));
        q[fmt(p)] = sorted[idx];
    }
    j["quantiles"] = q;
    j["samples"] = result.samples;
    j["n_nodes"] = result.n_nodes;
    write_text(a.output, j.dump(2) + "\n");
    return kExitOk;
}

struct DetectArgs {
    ModelArgs model;
    agint::detector::DetectorConfig cfg;
    std::string snr = "-22:-8:2";
    bool no_adjust = false;
    std::string output = "detection";
};

int run_detect(const DetectArgs& a) {
    ConfigEcho echo;
    echo.emplace_back("command", "detect");
    auto cfg = a.cfg;
    cfg.snr_grid_db = parse_linear_grid(a.snr);
    cfg.adjust_with_delta = !a.no_adjust;
    const auto law = resolve_law(a.model, echo);
    if (law.eta >= 1.0)
        throw config_error("detect: alpha = 2 (point-mass law) not supported");

    echo.emplace_back("detector.n_samples", std::to_string(cfg.n_samples));
    echo.emplace_back("detector.smoothing_factor",
                      std::to_string(cfg.smoothing_factor));
    echo.emplace_back("detector.target_pfa", fmt(cfg.target_pfa));
    echo.emplace_back("detector.delta", fmt(cfg.delta));
    echo.emplace_back("detector.reference_delta", fmt(cfg.reference_delta));
    echo.emplace_back("detector.beta", fmt(cfg.beta));
    echo.emplace_back("detector.inr_db", fmt(cfg.inr_db));
    echo.emplace_back("detector.snr_grid_db", a.snr);
    echo.emplace_back("detector.trials", std::to_string(cfg.trials));
    echo.emplace_back("detector.cal_trials", std::to_string(cfg.cal_trials));
    echo.emplace_back("detector.seed", std::to_string(cfg.seed));
    echo.emplace_back("detector.adjust_with_delta",
                      cfg.adjust_with_delta ? "true" : "false");

    const auto curve = agint::detector::detection_curve(cfg, law);
    write_text(a.output + ".csv", agint::io::curve_csv(curve, echo));

    json j;
    j["schema_version"] = agint::io::kSchemaVersion;
    j["config"] = echo_to_json(echo);
    j["threshold"] = curve.threshold;
    j["threshold_adjusted"] = curve.threshold_adjusted;
    j["pfa_achieved"] = curve.pfa_achieved;
    j["snr_db"] = curve.snr_db;
    j["pd"] = curve.pd;
    write_text(a.output + ".json", j.dump(2) + "\n");
    return kExitOk;
}

struct ValidateArgs {
    agint::validate::ValidationOptions opts;
    std::string output = "validation_report.json";
};

int run_validate(const ValidateArgs& a) {
    const auto report = agint::validate::run_validation(a.opts);

    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["kind"] = c.hard ? "check" : "report";
        jc["passed"] = c.passed;
        if (std::isnan(c.value))
            jc["value"] = nullptr;
        else
            jc["value"] = c.value;
        if (c.hard) jc["bound"] = c.bound;
        jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    json j;
    j["schema_version"] = agint::io::kSchemaVersion;
    j["seed"] = report.seed;
    j["paper_literal"] = a.opts.paper_literal;
    j["quick"] = a.opts.quick;
    j["all_passed"] = report.all_passed();
    j["checks"] = std::move(checks);
    write_text(a.output, j.dump(2) + "\n");

    for (const auto& c : report.checks) {
        if (c.hard)
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": "
                      << fmt(c.value) << " (bound " << fmt(c.bound) << ")\n";
        else
            std::cout << "INFO " << c.name << ": " << fmt(c.value) << " — "
                      << c.note << '\n';
    }
    std::cout << (report.all_passed() ? "all checks passed"
                                      : "validation FAILED")
              << " (seed " << report.seed << ", report " << a.output << ")\n";
    return report.all_passed() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "agint — worst-case aggregate interference characterization for a "
        "finite-area secondary network (stable-law analytics, Monte Carlo, "
        "eigenvalue detector)"};
    app.require_subcommand(1);

    const std::string config_help =
        "config file with key = value lines mirroring the flags "
        "(model.*, region.*, fading.*, campaign.*, detector.*, "
        "inversion.*, validate.*); flags override file values; unknown "
        "keys are rejected";

    TableArgs pdf_args, cdf_args, mean_args, entropy_args;
    CampaignArgs campaign_args;
    DetectArgs detect_args;
    ValidateArgs validate_args;
    std::map<CLI::App*, KeyMap> key_maps;
    std::map<CLI::App*, std::string> config_paths;
    std::map<CLI::App*, std::function<int()>> runners;

    auto add_common = [&](CLI::App* cmd) -> KeyMap& {
        cmd->add_option("--config", config_paths[cmd], config_help);
        return key_maps[cmd];
    };

    auto add_table = [&](const char* name, const char* desc, TableArgs& a,
                         bool literal_flag) {
        auto* cmd = app.add_subcommand(name, desc);
        auto& keys = add_common(cmd);
        add_model_options(cmd, a.model, keys);
        add_inversion_options(cmd, a.inversion, keys);
        cmd->add_option("--r", a.points,
                        "evaluation point(s) (interference units, > 0; "
                        "repeatable)");
        cmd->add_option("--grid", a.grid,
                        "log-spaced evaluation grid lo:hi:count "
                        "(interference units)");
        cmd->add_option("--output", a.output,
                        "output CSV path (default: stdout)");
        if (literal_flag)
            cmd->add_flag("--paper-literal", a.paper_literal,
                          "add the printed-form column for comparison");
        if (std::string(name) == "pdf")
            cmd->add_flag("--oracle", a.oracle,
                          "add a numerical-inversion column; exit 3 if it "
                          "disagrees with the closed form beyond 1e-6");
        return cmd;
    };

    auto* pdf_cmd = add_table(
        "pdf", "density of the aggregate-interference law", pdf_args, true);
    runners[pdf_cmd] = [&] { return run_table(pdf_args, "pdf"); };

    auto* cdf_cmd = add_table("cdf", "distribution function of the law",
                              cdf_args, false);
    runners[cdf_cmd] = [&] { return run_table(cdf_args, "cdf"); };

    auto* mean_cmd = add_table(
        "mean", "mean interference truncated to [0, r_max]", mean_args, true);
    runners[mean_cmd] = [&] { return run_table(mean_args, "mean"); };

    {
        auto* cmd = app.add_subcommand(
            "entropy",
            "distributional uncertainty (integral of f ln f) of the law");
        auto& keys = add_common(cmd);
        add_model_options(cmd, entropy_args.model, keys);
        add_inversion_options(cmd, entropy_args.inversion, keys);
        cmd->add_option("--output", entropy_args.output,
                        "output CSV path (default: stdout)");
        runners[cmd] = [&] { return run_entropy(entropy_args); };
    }

    {
        auto* cmd = app.add_subcommand(
            "campaign", "seeded Monte Carlo interference campaign");
        auto& keys = add_common(cmd);
        add_model_options(cmd, campaign_args.model, keys);
        auto* trials =
            cmd->add_option("--trials", campaign_args.trials,
                            "number of Monte Carlo trials (count, >= 1)");
        auto* seed = cmd->add_option("--seed", campaign_args.seed,
                                     "campaign seed (64-bit integer)")
                         ->envname("AGINT_SEED");
        auto* txp = cmd->add_option(
            "--tx-power", campaign_args.tx_power,
            "secondary transmit power (dimensionless, default 1)");
        cmd->add_option("--format", campaign_args.format,
                        "output format: csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", campaign_args.output,
                        "output path (default: stdout)");
        keys["campaign.trials"] = {
            trials, [&](const std::string& v) {
                campaign_args.trials = parse_u64("campaign.trials", v);
            }};
        keys["campaign.seed"] = {seed, [&](const std::string& v) {
                                     campaign_args.seed =
                                         parse_u64("campaign.seed", v);
                                 }};
        keys["campaign.tx_power"] = {
            txp, [&](const std::string& v) {
                campaign_args.tx_power = parse_double("campaign.tx_power", v);
            }};
        runners[cmd] = [&] { return run_campaign_cmd(campaign_args); };
    }

    {
        auto* cmd = app.add_subcommand(
            "detect",
            "eigenvalue-detector experiment: Pd vs SNR at fixed Pfa");
        auto& keys = add_common(cmd);
        add_model_options(cmd, detect_args.model, keys);
        auto& cfg = detect_args.cfg;
        auto* ns = cmd->add_option("--samples", cfg.n_samples,
                                   "received samples N per trial (count)");
        auto* sm = cmd->add_option(
            "--smoothing", cfg.smoothing_factor,
            "smoothing factor L, consecutive-shift window (count, >= 2)");
        auto* pfa = cmd->add_option("--pfa", cfg.target_pfa,
                                    "target false-alarm probability in (0,1)");
        auto* delta = cmd->add_option(
            "--delta", cfg.delta,
            "interference uncertainty feeding the threshold adjustment "
            "(nats)");
        auto* beta = cmd->add_option(
            "--beta", cfg.beta, "threshold-adjustment sensitivity (per nat)");
        auto* inr = cmd->add_option(
            "--inr", cfg.inr_db,
            "interference-to-noise ratio pinned at the law median (dB)");
        cmd->add_option("--snr", detect_args.snr,
                        "SNR grid start:stop:step (dB)");
        auto* trials = cmd->add_option(
            "--trials", cfg.trials, "H1 trials per SNR point (count)");
        auto* cal = cmd->add_option(
            "--cal-trials", cfg.cal_trials,
            "H0 trials for threshold calibration (count, >= 50/pfa); the "
            "held-out Pfa batch is twice this");
        auto* seed = cmd->add_option("--seed", cfg.seed,
                                     "detector seed (64-bit integer)")
                         ->envname("AGINT_SEED");
        cmd->add_flag("--no-adjust", detect_args.no_adjust,
                      "disable the delta threshold adjustment");
        cmd->add_option("--output", detect_args.output,
                        "output base path; writes <base>.csv and <base>.json");
        keys["detector.n_samples"] = {
            ns, [&cfg](const std::string& v) {
                cfg.n_samples = parse_u64("detector.n_samples", v);
            }};
        keys["detector.smoothing_factor"] = {
            sm, [&cfg](const std::string& v) {
                cfg.smoothing_factor = static_cast<int>(
                    parse_u64("detector.smoothing_factor", v));
            }};
        keys["detector.target_pfa"] = {
            pfa, [&cfg](const std::string& v) {
                cfg.target_pfa = parse_double("detector.target_pfa", v);
            }};
        keys["detector.delta"] = {delta, [&cfg](const std::string& v) {
                                      cfg.delta =
                                          parse_double("detector.delta", v);
                                  }};
        keys["detector.beta"] = {beta, [&cfg](const std::string& v) {
                                     cfg.beta =
                                         parse_double("detector.beta", v);
                                 }};
        keys["detector.inr_db"] = {inr, [&cfg](const std::string& v) {
                                       cfg.inr_db =
                                           parse_double("detector.inr_db", v);
                                   }};
        keys["detector.snr_grid_db"] = {
            nullptr,
            [&](const std::string& v) { detect_args.snr = v; }};
        keys["detector.trials"] = {
            trials, [&cfg](const std::string& v) {
                cfg.trials = parse_u64("detector.trials", v);
            }};
        keys["detector.cal_trials"] = {
            cal, [&cfg](const std::string& v) {
                cfg.cal_trials = parse_u64("detector.cal_trials", v);
            }};
        keys["detector.seed"] = {seed, [&cfg](const std::string& v) {
                                     cfg.seed = parse_u64("detector.seed", v);
                                 }};
        keys["detector.adjust_with_delta"] = {
            nullptr, [&](const std::string& v) {
                detect_args.no_adjust =
                    !parse_bool("detector.adjust_with_delta", v);
            }};
        runners[cmd] = [&] { return run_detect(detect_args); };
    }

    {
        auto* cmd = app.add_subcommand(
            "validate",
            "oracle triangle: closed forms vs inversion vs Monte Carlo, "
            "plus detector and determinism checks; JSON report");
        auto& keys = add_common(cmd);
        cmd->add_flag("--paper-literal", validate_args.opts.paper_literal,
                      "add printed-form discrepancy report lines");
        cmd->add_flag("--quick", validate_args.opts.quick,
                      "smaller Monte Carlo sizes; detector curve skipped");
        auto* seed = cmd->add_option("--seed", validate_args.opts.seed,
                                     "seed for all stochastic checks "
                                     "(64-bit integer; echoed in the report)")
                         ->envname("AGINT_SEED");
        cmd->add_flag("--inject-negate-k", validate_args.opts.negate_k_fault,
                      "fault injection: negate K in the normalization check "
                      "(must fail; for testing the harness)");
        cmd->add_option("--output", validate_args.output,
                        "report JSON path");
        keys["validate.paper_literal"] = {
            nullptr, [&](const std::string& v) {
                validate_args.opts.paper_literal =
                    parse_bool("validate.paper_literal", v);
            }};
        keys["validate.quick"] = {nullptr, [&](const std::string& v) {
                                      validate_args.opts.quick =
                                          parse_bool("validate.quick", v);
                                  }};
        keys["validate.seed"] = {seed, [&](const std::string& v) {
                                     validate_args.opts.seed =
                                         parse_u64("validate.seed", v);
                                 }};
        runners[cmd] = [&] { return run_validate(validate_args); };
    }

    try {
        app.parse(argc, argv);
        for (auto* sub : app.get_subcommands()) {
            if (!config_paths[sub].empty())
                apply_config_file(config_paths[sub], key_maps[sub]);
            return runners.at(sub)();
        }
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const agint::point_mass_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const agint::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const agint::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const agint::convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const agint::math_domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConvergence;
    }
}
