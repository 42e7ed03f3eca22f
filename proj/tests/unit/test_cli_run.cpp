#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "irrigen/cli/run.hpp"

namespace fs = std::filesystem;
using irrigen::cli::parse_config;
using irrigen::cli::RunOptions;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("irrigen_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, double> read_report(const fs::path& p) {
    std::istringstream in(slurp(p));
    std::string line;
    std::map<std::string, double> rows;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "key,value");
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        rows[line.substr(0, comma)] = std::strtod(line.c_str() + comma + 1, nullptr);
    }
    return rows;
}

RunOptions quiet_options(const fs::path& out, bool sequential = false) {
    RunOptions opts;
    opts.out_dir = out;
    opts.sequential = sequential;
    opts.diagnostics = nullptr;
    return opts;
}

const char* kExergyOracle =
    "[exergy]\nq_r = 1000\nt_r = 500\nt_a = 300\ndelta_h = 0\ndelta_s = 0\n"
    "delta_ek = 0\ndelta_eg = 0\nw = 0\nt_ref = 300\n";

}  // namespace

TEST_CASE("exergy run reports the derived oracle rows") {
    TempDir tmp;
    const auto cfg = parse_config(kExergyOracle);
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path)) == irrigen::cli::exit_ok);
    const std::string text = slurp(tmp.path / "exergy_report.csv");
    CHECK(text.find("delta_s_irr,1.333333") != std::string::npos);
    CHECK(text.find("w_lost,400") != std::string::npos);
    const auto rows = read_report(tmp.path / "exergy_report.csv");
    CHECK(rows.at("delta_s_irr") == Catch::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(rows.at("w_lost") == Catch::Approx(400.0).epsilon(1e-12));
    CHECK(rows.at("lagrangian") == Catch::Approx(-400.0).epsilon(1e-12));
    CHECK(rows.at("hamiltonian") == Catch::Approx(400.0).epsilon(1e-12));
    CHECK(rows.at("second_law_ok") == 1.0);
}

TEST_CASE("onsager run evaluates the densities for the given tensors") {
    TempDir tmp;
    const auto cfg = parse_config(
        "[onsager]\nn = 1\nxi_0 = 1\nl2_0_0 = 2\nl3_0_0_0 = 6\nrho_s = 10\nrho_pi = 6\n");
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path)) == irrigen::cli::exit_ok);
    const auto rows = read_report(tmp.path / "onsager_report.csv");
    CHECK(rows.at("entropy_rate_density") == Catch::Approx(5.0).epsilon(1e-12));
    CHECK(rows.at("dissipative_potential") == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(rows.at("lagrangian_density") == Catch::Approx(3.0).epsilon(1e-12));
    CHECK(rows.at("hamiltonian_density") == Catch::Approx(-3.0).epsilon(1e-12));
    CHECK(rows.at("conjugate_momenta_max_abs") == 0.0);
    CHECK(rows.at("residual_potential_gap") == Catch::Approx(-1.0).epsilon(1e-12));
    CHECK(rows.at("residual_lavenda") == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("phase run on the golden rotation ties orbit and ensemble averages") {
    TempDir tmp;
    const auto cfg = parse_config(
        "[phase]\nsystem = golden_rotation\nsteps = 1000000\nsamples = 100000\n"
        "x0_0 = 0\ndump_trajectory = orbit.csv\ndump_ensemble = measure.csv\n");
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path)) == irrigen::cli::exit_ok);
    const auto rows = read_report(tmp.path / "phase_report.csv");
    CHECK(std::fabs(rows.at("time_average") - 0.5) < 1e-3);
    CHECK(rows.at("birkhoff_residual") < 1e-3);
    CHECK(rows.at("contraction_rate") == 0.0);  // rotation has unit Jacobian
    CHECK(rows.at("is_cycle") == 0.0);
    CHECK(rows.at("trajectory_truncated") == 0.0);

    const std::string orbit = slurp(tmp.path / "orbit.csv");
    CHECK(orbit.rfind("index,c0,weight\n", 0) == 0);
    CHECK(std::count(orbit.begin(), orbit.end(), '\n') == 1002);  // header + 1001 points
    const std::string measure = slurp(tmp.path / "measure.csv");
    CHECK(measure.rfind("index,c0,weight\n", 0) == 0);
}

TEST_CASE("phase run on a contracting flow reports the entropy production") {
    TempDir tmp;
    const auto cfg = parse_config(
        "[phase]\nsystem = linear_contraction\nsteps = 100\ndt = 0.1\nlambda = 0.5\n"
        "samples = 1000\nm_dot = 2\n");
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path)) == irrigen::cli::exit_ok);
    const auto rows = read_report(tmp.path / "phase_report.csv");
    CHECK(rows.at("entropy_production") == 0.5);
    CHECK(rows.at("entropy_generation_statistical") == 0.25);
}

TEST_CASE("variational run optimizes and checks both principles") {
    TempDir tmp;
    const auto cfg = parse_config(
        "[variational]\nfamily = quadratic\nn = 1\npeak = 2\ncenter_0 = 1\n"
        "lo_0 = -5\nhi_0 = 5\nt_ref = 300\nhorizon = 1\ndt = 0.01\n");
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path)) == irrigen::cli::exit_ok);
    const auto rows = read_report(tmp.path / "variational_report.csv");
    CHECK(std::fabs(rows.at("theta_0") - 1.0) < 1e-6);
    CHECK(rows.at("value") == Catch::Approx(2.0).margin(1e-9));
    CHECK(rows.at("converged") == 1.0);
    CHECK(rows.at("stationarity_max_violation") <= 1e-8);
    CHECK(rows.at("least_action_minimal") == 1.0);
    CHECK(rows.at("action_at_star") == Catch::Approx(-600.0).margin(1e-6));

    const std::string trace = slurp(tmp.path / "variational_report_trace.csv");
    CHECK(trace.rfind("iteration,theta_0,value\n", 0) == 0);
    CHECK(std::count(trace.begin(), trace.end(), '\n') ==
          long(rows.at("evaluations")) + 1);
}

TEST_CASE("verify mode passes on a pristine build and is byte-deterministic") {
    TempDir tmp;
    auto cfg = parse_config("[verify]\nseed = 0\n");
    cfg.output_path = "verify_a.csv";
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path, true)) == irrigen::cli::exit_ok);
    cfg.output_path = "verify_b.csv";
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path, true)) == irrigen::cli::exit_ok);
    const std::string a = slurp(tmp.path / "verify_a.csv");
    const std::string b = slurp(tmp.path / "verify_b.csv");
    CHECK(a == b);
    const auto rows = read_report(tmp.path / "verify_a.csv");
    CHECK(rows.at("checks_failed") == 0.0);
    CHECK(rows.at("checks_total") > 20.0);
}

TEST_CASE("seed overrides and sequential mode keep phase outputs identical") {
    TempDir tmp;
    const auto cfg = parse_config(
        "[phase]\nsystem = standard_map\nsteps = 2000\nsamples = 5000\nkick = 0.9\n"
        "sample_lo = 0\nsample_hi = 6.28\nseed = 5\n");
    auto opts_a = quiet_options(tmp.path, true);
    opts_a.seed_override = 11;
    auto cfg_a = cfg;
    cfg_a.output_path = "a.csv";
    auto cfg_b = cfg;
    cfg_b.output_path = "b.csv";
    REQUIRE(irrigen::cli::run(cfg_a, opts_a) == irrigen::cli::exit_ok);
    auto opts_b = quiet_options(tmp.path, true);
    opts_b.seed_override = 11;
    REQUIRE(irrigen::cli::run(cfg_b, opts_b) == irrigen::cli::exit_ok);
    CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
}

TEST_CASE("numerical failures surface as exit status 2") {
    TempDir tmp;
    // logistic map from x0 = 3 diverges to -inf: time_average throws domain_error
    const auto cfg =
        parse_config("[phase]\nsystem = logistic\nsteps = 1000\nx0_0 = 3\nsamples = 10\n");
    CHECK(irrigen::cli::run(cfg, quiet_options(tmp.path)) ==
          irrigen::cli::exit_numerical_failure);
}

TEST_CASE("report values are rendered at 17 significant digits") {
    TempDir tmp;
    const auto cfg = parse_config(kExergyOracle);
    REQUIRE(irrigen::cli::run(cfg, quiet_options(tmp.path)) == irrigen::cli::exit_ok);
    const auto rows = read_report(tmp.path / "exergy_report.csv");
    // reading the text back reproduces the computed double bit-for-bit
    irrigen::exergy::ProcessBalance b;
    b.q_r = 1000.0;
    b.t_r = 500.0;
    b.t_a = 300.0;
    b.t_ref = 300.0;
    CHECK(rows.at("delta_s_irr") == irrigen::exergy::entropy_generation(b));
    CHECK(rows.at("w_lost") == irrigen::exergy::lost_work(b));
}
