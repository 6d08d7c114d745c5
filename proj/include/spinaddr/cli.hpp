#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinaddr/fidelity.hpp"
#include "spinaddr/swap_synth.hpp"

namespace spinaddr {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat run configuration; frequencies are labeled MHz and used as rad/us
/// internally. Defaults are the standard scenario.
struct RunConfig {
    double delta_mhz = 10.0;
    double sigma_mhz = 60.0;
    int ell = 4;
    double theta_over_pi = 0.5;
    double phi_over_pi = 0.5;
    std::vector<int> n_qubits_list = {2, 5, 10, 15, 20, 25, 30, 40, 50};
    int n_configs = 10000;
    std::uint64_t seed = 1;
    double f_swap = 1.0;
    std::string estimator = "mc_mean";
    double j_max_mhz = 50.0;
    double delta_ez_mhz = 85.0;
    std::string output_path = "sweep.csv";

    void validate() const;  // throws ConfigError naming the offending field
    SpectrumParams spectrum() const;
    ExchangeLink link() const;
    Estimator estimator_enum() const;
};

/// Parse a flat JSON object with exactly the RunConfig keys (all optional,
/// unknown keys rejected).
RunConfig load_config(const std::string& path);
RunConfig parse_config_json(const std::string& text);

/// Fixed 12-significant-digit decimal formatting used for all CSV output.
std::string format_csv_value(double v);

/// Fidelity-vs-N sweep; returns the CSV text (header + one row per N) and
/// writes it to config.output_path.
std::string sweep_csv(const RunConfig& config, int n_workers = 0);
int cmd_sweep(const RunConfig& config, std::ostream& log);

int cmd_plan(const RunConfig& config, int target_site, std::uint64_t config_seed,
             bool fixture_table1, std::ostream& out);

int cmd_drive(const RunConfig& config, std::ostream& out);

int cmd_swap(const RunConfig& config, std::ostream& out);

}  // namespace spinaddr
