#include "spinaddr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "spinaddr/oracle.hpp"
#include "spinaddr/sequencer.hpp"
#include "spinaddr/swap_synth.hpp"

namespace spinaddr {

namespace {

constexpr double kPi = std::numbers::pi;

double sequence_total_time(const RunConfig& config, double swap_duration) {
    const double rotation_time = 2.0 * config.ell * kPi / config.delta_mhz;
    return 4.0 * rotation_time + 4.0 * swap_duration;
}

}  // namespace

void RunConfig::validate() const {
    if (!(delta_mhz > 0.0)) throw ConfigError("config: delta_mhz must be positive");
    if (!(sigma_mhz > 0.0)) throw ConfigError("config: sigma_mhz must be positive");
    if (ell < 1) throw ConfigError("config: ell must be a positive integer");
    if (theta_over_pi < 0.0) throw ConfigError("config: theta_over_pi must be non-negative");
    if (phi_over_pi < 0.0) throw ConfigError("config: phi_over_pi must be non-negative");
    if (n_qubits_list.empty()) throw ConfigError("config: n_qubits_list must be non-empty");
    for (int n : n_qubits_list)
        if (n < 1) throw ConfigError("config: n_qubits_list entries must be >= 1");
    if (n_configs < 1) throw ConfigError("config: n_configs must be >= 1");
    if (f_swap < 0.0 || f_swap > 1.0) throw ConfigError("config: f_swap must be in [0, 1]");
    if (estimator != "mc_mean" && estimator != "paper_weighted")
        throw ConfigError("config: estimator must be mc_mean or paper_weighted");
    if (!(j_max_mhz > 0.0)) throw ConfigError("config: j_max_mhz must be positive");
    if (output_path.empty()) throw ConfigError("config: output_path must be non-empty");
}

SpectrumParams RunConfig::spectrum() const {
    SpectrumParams p;
    p.omega0 = 0.0;
    p.sigma = sigma_mhz;
    p.delta = delta_mhz;
    p.tunability = delta_mhz / 2.0;
    return p;
}

ExchangeLink RunConfig::link() const { return ExchangeLink{j_max_mhz, delta_ez_mhz, 0.0}; }

Estimator RunConfig::estimator_enum() const {
    return estimator == "mc_mean" ? Estimator::mc_mean : Estimator::paper_weighted;
}

RunConfig parse_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "delta_mhz") cfg.delta_mhz = value.get<double>();
            else if (key == "sigma_mhz") cfg.sigma_mhz = value.get<double>();
            else if (key == "ell") cfg.ell = value.get<int>();
            else if (key == "theta_over_pi") cfg.theta_over_pi = value.get<double>();
            else if (key == "phi_over_pi") cfg.phi_over_pi = value.get<double>();
            else if (key == "n_qubits_list") cfg.n_qubits_list = value.get<std::vector<int>>();
            else if (key == "n_configs") cfg.n_configs = value.get<int>();
            else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "f_swap") cfg.f_swap = value.get<double>();
            else if (key == "estimator") cfg.estimator = value.get<std::string>();
            else if (key == "j_max_mhz") cfg.j_max_mhz = value.get<double>();
            else if (key == "delta_ez_mhz") cfg.delta_ez_mhz = value.get<double>();
            else if (key == "output_path") cfg.output_path = value.get<std::string>();
            else throw ConfigError("config: unknown key '" + key + "'");
        } catch (const nlohmann::json::exception&) {
            throw ConfigError("config: bad value for key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_json(ss.str());
}

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string sweep_csv(const RunConfig& config, int n_workers) {
    config.validate();
    const SpectrumParams params = config.spectrum();
    const double swap_duration =
        plan_swap(config.link(), calibrated_alpha_total()).total_duration;
    const double t_total = sequence_total_time(config, swap_duration);

    std::ostringstream csv;
    csv << "n_qubits,f_avg_sequence,f_avg_sequence_weighted,f_avg_simple,"
           "stderr_sequence,stderr_simple,n_configs,seed\n";
    for (int n : config.n_qubits_list) {
        MonteCarloSettings s;
        s.n_qubits = n;
        s.n_configs = config.n_configs;
        s.seed = config.seed;
        s.estimator = config.estimator_enum();
        s.theta = config.theta_over_pi * kPi;
        s.phi = config.phi_over_pi * kPi;
        s.ell = config.ell;
        s.f_swap = config.f_swap;
        s.baseline_t_total = t_total;
        s.n_workers = n_workers;
        const FidelityReport r = monte_carlo_average(params, s);
        csv << n << ',' << format_csv_value(r.f_avg_mean) << ','
            << format_csv_value(r.f_avg_weighted) << ',' << format_csv_value(r.f_avg_simple)
            << ',' << format_csv_value(r.standard_error) << ','
            << format_csv_value(r.standard_error_simple) << ',' << r.n_configs << ','
            << config.seed << '\n';
    }
    return csv.str();
}

int cmd_sweep(const RunConfig& config, std::ostream& log) {
    const std::string csv = sweep_csv(config);
    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        log << "error: cannot write '" << config.output_path << "'\n";
        return 2;
    }
    out << csv;
    if (!out.good()) {
        log << "error: write failed for '" << config.output_path << "'\n";
        return 2;
    }
    log << "wrote " << config.output_path << " (" << config.n_qubits_list.size() << " rows)\n";
    return 0;
}

int cmd_plan(const RunConfig& config, int target_site, std::uint64_t config_seed,
             bool fixture_table1, std::ostream& out) {
    config.validate();
    const ArrayConfig cfg = fixture_table1
                                ? table1_fixture()
                                : sample_config(config.spectrum(), config.n_qubits_list.front(),
                                                config_seed);
    const double theta = config.theta_over_pi * kPi;
    const double phi = config.phi_over_pi * kPi;
    SequencePlan plan;
    try {
        plan = plan_sequence(cfg, target_site, theta, phi, config.ell, config.link(),
                             calibrated_alpha_total());
    } catch (const std::runtime_error& e) {
        out << "error: " << e.what() << " (try a different seed)\n";
        return 2;
    }

    out << "array bins:";
    for (const auto& q : cfg.qubits) out << ' ' << q.bin;
    out << "\ntarget site " << plan.target_site + 1 << ", partner site " << plan.partner_site + 1
        << " (1-based)\n\n";
    out << schedule_text(plan) << '\n';

    const SwapPlan half_pi_plan = plan_swap(config.link(), kPi / 2.0);
    out << "total time (calibrated swaps): "
        << format_csv_value(plan.total_duration) << " us\n";
    out << "total time (pi/2-accounting swaps): "
        << format_csv_value(sequence_total_time(config, half_pi_plan.total_duration)) << " us\n\n";

    out << "spin-state evolution:\n";
    int idx = 1;
    for (const std::string& row : bookkeeping_rows(plan, cfg)) out << idx++ << " | " << row << '\n';
    return 0;
}

int cmd_drive(const RunConfig& config, std::ostream& out) {
    config.validate();
    const double theta = config.theta_over_pi * kPi;
    const double omega = optimal_drive_strength(config.delta_mhz, theta, config.ell);
    const DriveParams drive = make_step_drive(config.delta_mhz, theta, config.ell, Axis::X, 0);
    out << "Omega = " << format_csv_value(omega) << " MHz\n";
    out << "T     = " << format_csv_value(rotation_step_duration(drive)) << " us\n";
    out << " m   idle fidelity |1/2 Tr(U_m)|^2\n";
    for (int m = 1; m <= 10; ++m) {
        const double f = idle_fidelity(drive.rabi, m * config.delta_mhz, drive.duration);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%2d   %.6f\n", m, f);
        out << buf;
    }
    return 0;
}

int cmd_swap(const RunConfig& config, std::ostream& out) {
    config.validate();
    const ExchangeLink link = config.link();
    if (!(link.j_max > 0.0)) {
        out << "error: degenerate link (j_max must be positive)\n";
        return 1;
    }
    const SwapPlan half_pi_plan = plan_swap(link, kPi / 2.0);
    const SwapPlan cal_plan = plan_swap(link, calibrated_alpha_total());
    const SwapVerification v = verify_swap_plan(cal_plan, link);

    out << "gamma = " << format_csv_value(cal_plan.gamma) << " rad\n";
    out << "pi/2 accounting: n = " << half_pi_plan.n_reps
        << ", phi = " << format_csv_value(half_pi_plan.phi)
        << ", chi = " << format_csv_value(half_pi_plan.chi) << "\n";
    out << "  segments per rep (outer, middle, outer) = ("
        << format_csv_value(half_pi_plan.outer_duration) << ", "
        << format_csv_value(half_pi_plan.middle_duration) << ", "
        << format_csv_value(half_pi_plan.outer_duration) << ") us\n";
    out << "  duration = " << format_csv_value(half_pi_plan.total_duration) << " us (closed form "
        << format_csv_value(swap_duration_closed_form(half_pi_plan, link)) << ")\n";
    out << "calibrated (alpha = " << format_csv_value(cal_plan.alpha_total)
        << "): n = " << cal_plan.n_reps << ", phi = " << format_csv_value(cal_plan.phi)
        << ", chi = " << format_csv_value(cal_plan.chi) << "\n";
    out << "  duration = " << format_csv_value(cal_plan.total_duration) << " us\n";
    out << "  SWAP-equivalence fidelity (exact 4x4, up to local z) = "
        << format_csv_value(v.fidelity) << "\n";
    return 0;
}

}  // namespace spinaddr
