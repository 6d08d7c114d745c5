#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spinaddr/cli.hpp"

using namespace spinaddr;

namespace {

RunConfig tiny_config() {
    RunConfig cfg;
    cfg.n_qubits_list = {2, 4};
    cfg.n_configs = 60;
    cfg.seed = 11;
    return cfg;
}

}  // namespace

TEST_CASE("config parsing: defaults, overrides, rejects") {
    const RunConfig def = parse_config_json("{}");
    CHECK(def.delta_mhz == 10.0);
    CHECK(def.sigma_mhz == 60.0);
    CHECK(def.ell == 4);
    CHECK(def.theta_over_pi == 0.5);
    CHECK(def.j_max_mhz == 50.0);
    CHECK(def.delta_ez_mhz == 85.0);
    CHECK(def.estimator == "mc_mean");

    const RunConfig cfg = parse_config_json(
        R"({"delta_mhz": 20.0, "ell": 8, "n_qubits_list": [3, 7], "seed": 5,
            "estimator": "paper_weighted", "output_path": "x.csv"})");
    CHECK(cfg.delta_mhz == 20.0);
    CHECK(cfg.ell == 8);
    CHECK(cfg.n_qubits_list == std::vector<int>{3, 7});
    CHECK(cfg.estimator_enum() == Estimator::paper_weighted);

    CHECK_THROWS_AS(parse_config_json(R"({"bogus_key": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"delta_mhz": -1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"estimator": "wrong"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"n_configs": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"delta_mhz": "ten"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json("not json"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/path.json"), ConfigError);
}

TEST_CASE("csv value formatting is 12 significant digits") {
    CHECK(format_csv_value(0.5) == "0.5");
    CHECK(format_csv_value(0.999399038544) == "0.999399038544");
    CHECK(format_csv_value(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("sweep csv: deterministic across runs and worker counts") {
    const RunConfig cfg = tiny_config();
    const std::string a = sweep_csv(cfg, 1);
    const std::string b = sweep_csv(cfg, 1);
    const std::string c = sweep_csv(cfg, 4);
    CHECK(a == b);
    CHECK(a == c);

    std::istringstream lines(a);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "n_qubits,f_avg_sequence,f_avg_sequence_weighted,f_avg_simple,"
          "stderr_sequence,stderr_simple,n_configs,seed");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("sweep csv: single-config row stays within [0, 1]") {
    RunConfig cfg = tiny_config();
    cfg.n_qubits_list = {2};
    cfg.n_configs = 1;
    const std::string csv = sweep_csv(cfg, 1);
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::istringstream fields(row);
    std::string field;
    std::getline(fields, field, ',');
    CHECK(field == "2");
    for (int i = 0; i < 3; ++i) {
        std::getline(fields, field, ',');
        const double v = std::stod(field);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("cmd_sweep writes the file and reports bad paths") {
    RunConfig cfg = tiny_config();
    cfg.output_path = "/tmp/spinaddr_test_sweep.csv";
    std::ostringstream log;
    CHECK(cmd_sweep(cfg, log) == 0);
    std::ifstream in(cfg.output_path);
    CHECK(in.good());

    cfg.output_path = "/nonexistent_dir/x.csv";
    std::ostringstream log2;
    CHECK(cmd_sweep(cfg, log2) == 2);
}

TEST_CASE("cmd_drive prints the closed-form parameters") {
    RunConfig cfg;
    std::ostringstream out;
    CHECK(cmd_drive(cfg, out) == 0);
    const std::string s = out.str();
    CHECK(s.find("Omega = 0.625") != std::string::npos);
    CHECK(s.find("T     = 2.51327412287") != std::string::npos);
    CHECK(s.find(" 1   0.999399") != std::string::npos);
    CHECK(s.find(" 2   0.999849") != std::string::npos);

    RunConfig ell8;
    ell8.ell = 8;
    std::ostringstream out8;
    cmd_drive(ell8, out8);
    CHECK(out8.str().find("Omega = 0.3125") != std::string::npos);
    CHECK(out8.str().find("T     = 5.02654824574") != std::string::npos);

    RunConfig quarter;
    quarter.theta_over_pi = 0.25;
    std::ostringstream outq;
    cmd_drive(quarter, outq);
    CHECK(outq.str().find("Omega = 0.3125") != std::string::npos);
}

TEST_CASE("cmd_swap reports the synthesis") {
    RunConfig cfg;
    std::ostringstream out;
    CHECK(cmd_swap(cfg, out) == 0);
    const std::string s = out.str();
    CHECK(s.find("pi/2 accounting: n = 3") != std::string::npos);
    CHECK(s.find("SWAP-equivalence fidelity") != std::string::npos);

    RunConfig strong;
    strong.delta_ez_mhz = 5000.0;
    std::ostringstream out2;
    cmd_swap(strong, out2);
    // duration ~ pi^2 / (2 J) = 0.0987 us under pi/2 accounting
    CHECK(out2.str().find("duration = 0.099") != std::string::npos);

    RunConfig zero;
    zero.delta_ez_mhz = 0.0;
    std::ostringstream out3;
    CHECK(cmd_swap(zero, out3) == 0);
    CHECK(out3.str().find("phi = 0") != std::string::npos);
}

TEST_CASE("cmd_plan prints the fixture schedule and bookkeeping") {
    RunConfig cfg;
    std::ostringstream out;
    CHECK(cmd_plan(cfg, 0, 1, true, out) == 0);
    const std::string s = out.str();
    CHECK(s.find("target site 1, partner site 2") != std::string::npos);
    CHECK(s.find("step 1: rotate bin 1") != std::string::npos);
    CHECK(s.find("[Y_-p X_-t Y_p X_t]_1") != std::string::npos);
    CHECK(s.find("total time (pi/2-accounting swaps): 10.49") != std::string::npos);
}

TEST_CASE("cmd_plan: zero angles give an all-identity table") {
    RunConfig cfg;
    cfg.theta_over_pi = 0.0;
    cfg.phi_over_pi = 0.0;
    std::ostringstream out;
    CHECK(cmd_plan(cfg, 0, 1, true, out) == 0);
    CHECK(out.str().find("[I]_1") != std::string::npos);
}
