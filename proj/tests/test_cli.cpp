#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the binary with stderr redirected to cli_stderr.txt in the CWD.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + AGINT_BIN + " " + args +
        " 2>cli_stderr.txt";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string last_stderr() { return slurp("cli_stderr.txt"); }

// Parse CSV text: '#' preamble lines, a header row, then numeric rows.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> preamble;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            csv.preamble.push_back(line);
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        if (!header_seen) {
            while (std::getline(ls, cell, ',')) csv.header.push_back(cell);
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ls, cell, ','))
            row.push_back(cell == "nan"
                              ? std::numeric_limits<double>::quiet_NaN()
                              : std::stod(cell));
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

bool has_preamble(const Csv& csv, const std::string& entry) {
    for (const auto& line : csv.preamble)
        if (line == "# " + entry || line == "#" + entry) return true;
    return false;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

double levy_pdf(double k, double r) {
    return k / (2.0 * std::sqrt(kPi)) * std::pow(r, -1.5) *
           std::exp(-k * k / (4.0 * r));
}
}  // namespace

TEST_CASE("pdf closed form at a point") {
    const auto r = run_cli("pdf --alpha 4 --k 1 --r 1");
    CHECK(r.exit_code == 0);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.header ==
            std::vector<std::string>{"r", "pdf_canonical"});
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][0] == doctest::Approx(1.0));
    CHECK(csv.rows[0][1] == doctest::Approx(levy_pdf(1.0, 1.0)).epsilon(1e-9));
    CHECK(has_preamble(csv, "schema_version=1"));
    CHECK(has_preamble(csv, "model.k=1"));
}

TEST_CASE("pdf with the inversion cross-check column") {
    const auto r = run_cli("pdf --alpha 4 --k 1 --grid 0.5:5:5 --oracle");
    CHECK(r.exit_code == 0);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.header ==
            std::vector<std::string>{"r", "pdf_canonical", "pdf_ltinv"});
    REQUIRE(csv.rows.size() == 5);
    for (const auto& row : csv.rows)
        CHECK(std::abs(row[1] - row[2]) <= 1e-6 * row[1]);
}

TEST_CASE("point-mass law is rejected for density output") {
    const auto r = run_cli("pdf --alpha 2 --k 1 --r 1");
    CHECK(r.exit_code == 2);
    CHECK(last_stderr().find("point mass") != std::string::npos);
}

TEST_CASE("point-mass truncated mean is well defined") {
    const auto r = run_cli("mean --alpha 2 --k 0.5 --r 1");
    CHECK(r.exit_code == 0);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][0] == doctest::Approx(1.0));
    CHECK(csv.rows[0][1] == doctest::Approx(0.5));
}

TEST_CASE("geometry that violates the truncation rule is rejected") {
    const auto r =
        run_cli("pdf --alpha 4 --lambda 0.05 --rmax 3.4 --rp 70 --rdec 70 "
                "--r 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("exactly one of the scale and the model group") {
    CHECK(run_cli("pdf --alpha 4 --k 1 --lambda 0.05 --r 1").exit_code == 2);
    CHECK(run_cli("pdf --alpha 4 --r 1").exit_code == 2);
}

TEST_CASE("entropy output") {
    const auto r = run_cli("entropy --alpha 4 --k 1");
    CHECK(r.exit_code == 0);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.header ==
            std::vector<std::string>{"k", "eta", "uncertainty", "entropy"});
    REQUIRE(csv.rows.size() == 1);
    const double c = 0.5;  // half-normal scale: K^2 / 2
    const double gamma_e = 0.5772156649015329;
    const double levy_entropy =
        0.5 * (1.0 + 3.0 * gamma_e + std::log(16.0 * kPi * c * c));
    CHECK(csv.rows[0][2] == doctest::Approx(-levy_entropy).epsilon(1e-6));
    CHECK(csv.rows[0][3] == doctest::Approx(levy_entropy).epsilon(1e-6));
}

TEST_CASE("config files mirror the flags") {
    {
        std::ofstream cfg("cli_cfg_good.txt");
        cfg << "# comment line\n"
            << "model.alpha = 4\n"
            << "model.k = 1  # trailing comment\n";
    }
    const auto file_only = run_cli("pdf --config cli_cfg_good.txt --r 1");
    CHECK(file_only.exit_code == 0);
    const auto csv = parse_csv(file_only.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][1] == doctest::Approx(levy_pdf(1.0, 1.0)).epsilon(1e-9));

    // A flag beats the file value for the same key.
    {
        std::ofstream cfg("cli_cfg_override.txt");
        cfg << "model.alpha = 4\nmodel.k = 5\n";
    }
    const auto overridden =
        run_cli("pdf --config cli_cfg_override.txt --k 1 --r 1");
    CHECK(overridden.exit_code == 0);
    CHECK(parse_csv(overridden.out).rows[0][1] ==
          doctest::Approx(levy_pdf(1.0, 1.0)).epsilon(1e-9));

    // Unknown keys name the exact path.
    {
        std::ofstream cfg("cli_cfg_bad.txt");
        cfg << "model.k = 1\nmodel.bogus = 3\n";
    }
    const auto bad = run_cli("pdf --config cli_cfg_bad.txt --r 1");
    CHECK(bad.exit_code == 2);
    CHECK(last_stderr().find("model.bogus") != std::string::npos);
}

TEST_CASE("campaign output is seed-deterministic") {
    const std::string args =
        "campaign --alpha 4 --lambda 0.05 --rmax 10.5 --trials 50 --seed 9";
    CHECK(run_cli(args + " --output cli_camp1.csv").exit_code == 0);
    CHECK(run_cli(args + " --output cli_camp2.csv").exit_code == 0);
    const auto text = slurp("cli_camp1.csv");
    CHECK(text == slurp("cli_camp2.csv"));
    CHECK(!text.empty());
    const auto csv = parse_csv(text);
    CHECK(csv.header ==
          std::vector<std::string>{"trial_index", "n_nodes", "interference"});
    CHECK(csv.rows.size() == 50);
    CHECK(has_preamble(csv, "campaign.seed=9"));

    // The seed environment variable is equivalent to --seed.
    const std::string noseed =
        "campaign --alpha 4 --lambda 0.05 --rmax 10.5 --trials 50";
    CHECK(run_cli(noseed + " --output cli_camp_env.csv", "AGINT_SEED=9")
              .exit_code == 0);
    CHECK(slurp("cli_camp_env.csv") == text);

    // The campaign requires the model group.
    CHECK(run_cli("campaign --alpha 4 --k 1 --trials 10").exit_code == 2);
}

TEST_CASE("detector experiment files") {
    const std::string args =
        "detect --alpha 4 --k 1 --trials 30 --cal-trials 510 --samples 400 "
        "--smoothing 4 --snr -20:-10:10 --seed 4";
    CHECK(run_cli(args + " --output cli_det1").exit_code == 0);
    CHECK(run_cli(args + " --output cli_det2").exit_code == 0);
    const auto csv_text = slurp("cli_det1.csv");
    const auto json_text = slurp("cli_det1.json");
    CHECK(!csv_text.empty());
    CHECK(json_text.find("\"pfa_achieved\"") != std::string::npos);
    CHECK(json_text.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(csv_text == slurp("cli_det2.csv"));
    CHECK(json_text == slurp("cli_det2.json"));
    const auto csv = parse_csv(csv_text);
    CHECK(csv.header == std::vector<std::string>{"snr_db", "pd"});
    CHECK(csv.rows.size() == 2);
}

TEST_CASE("fault injection makes validation fail") {
    const auto r = run_cli(
        "validate --quick --inject-negate-k --seed 3 "
        "--output cli_fault_report.json");
    CHECK(r.exit_code == 3);
    const auto report = slurp("cli_fault_report.json");
    CHECK(report.find("\"all_passed\": false") != std::string::npos);
    CHECK(report.find("\"seed\": 3") != std::string::npos);
    CHECK(r.out.find("FAIL normalization") != std::string::npos);
}
