#include "spinaddr/fidelity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spinaddr/rng.hpp"

namespace spinaddr {

namespace {

constexpr double kPi = std::numbers::pi;

/// Pairwise (tree) sum in fixed index order: deterministic for any worker
/// count and numerically stable.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(const std::vector<double>& v) { return v.empty() ? 0.0 : pairwise_sum(v, 0, v.size()); }

}  // namespace

double local_rotation_fidelity(const BinOccupancy& occ, int driven_bin, const DriveParams& drive,
                               double delta) {
    double f = 1.0;
    for (const auto& [bin, count] : occ.counts) {
        if (bin == driven_bin || count == 0) continue;
        const double fj = idle_fidelity(drive.rabi, (bin - driven_bin) * delta, drive.duration);
        f *= std::pow(fj, count);
    }
    return f;
}

std::optional<double> sequence_fidelity(const BinOccupancy& occ, const DriveParams& drive,
                                        double f_swap, double delta) {
    return sequence_fidelity(occ, drive, drive, f_swap, delta);
}

std::optional<double> sequence_fidelity(const BinOccupancy& occ, const DriveParams& drive_x,
                                        const DriveParams& drive_y, double f_swap, double delta) {
    const int n = occ.total;
    if (n < 2) return std::nullopt;
    int occupied = 0;
    for (const auto& [bin, count] : occ.counts)
        if (count > 0) ++occupied;
    if (occupied < 2) return std::nullopt;

    std::map<int, double> floc_x, floc_y;
    for (const auto& [bin, count] : occ.counts) {
        if (count == 0) continue;
        floc_x[bin] = local_rotation_fidelity(occ, bin, drive_x, delta);
        floc_y[bin] = local_rotation_fidelity(occ, bin, drive_y, delta);
    }

    double s = 0.0;
    for (const auto& [t, nt] : occ.counts) {
        if (nt == 0) continue;
        for (const auto& [k, nk] : occ.counts) {
            if (k == t || nk == 0) continue;
            const double w = (double(nt) / n) * (double(nk) / (n - nt));
            s += w * floc_x[t] * floc_x[t] * floc_y[k] * floc_y[k];
        }
    }
    const double f4 = f_swap * f_swap * f_swap * f_swap;
    return f4 * s;
}

double simple_pulse_baseline(const ArrayConfig& config, int target_site, double t_total) {
    if (!(t_total > 0.0)) throw std::invalid_argument("simple_pulse_baseline: t_total must be > 0");
    const double omega_simple = (kPi / 2.0) / t_total;
    const double push = config.params.delta / 2.0;
    const double target_freq = config.qubits[target_site].raw_larmor;

    double f = 1.0;
    for (const auto& q : config.qubits) {
        if (q.site == target_site) continue;
        const double offset = q.raw_larmor - target_freq;
        const double detuning = offset + (offset >= 0.0 ? push : -push);
        const Unitary2 u = off_resonant_unitary(omega_simple, detuning, t_total);
        f *= z_absorbed_fidelity(u, Unitary2::Identity());
    }
    return f;
}

double simple_pulse_baseline_average(const ArrayConfig& config, double t_total) {
    double s = 0.0;
    for (int t = 0; t < config.size(); ++t) s += simple_pulse_baseline(config, t, t_total);
    return s / config.size();
}

MonteCarloSettings::MonteCarloSettings() : theta(kPi / 2.0), phi(kPi / 2.0) {}

namespace {

struct ConfigResult {
    double f_seq = 0.0;
    double logp = 0.0;
    double f_simple = 0.0;
    bool addressable = false;
};

}  // namespace

FidelityReport monte_carlo_average(const SpectrumParams& params,
                                   const MonteCarloSettings& settings) {
    params.validate();
    if (settings.n_configs < 1)
        throw std::invalid_argument("monte_carlo_average: n_configs must be >= 1");

    const DriveParams drive_x = make_step_drive(params.delta, settings.theta, settings.ell,
                                                Axis::X, 0);
    const DriveParams drive_y = make_step_drive(params.delta, settings.phi, settings.ell,
                                                Axis::Y, 0);

    const int n_configs = settings.n_configs;
    std::vector<ConfigResult> results(n_configs);
    const auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const std::uint64_t sub = CounterRng::substream(settings.seed, i);
            const ArrayConfig cfg = sample_config(params, settings.n_qubits, sub);
            const BinOccupancy occ = occupancy(cfg);
            ConfigResult& r = results[i];
            const auto f = sequence_fidelity(occ, drive_x, drive_y, settings.f_swap, params.delta);
            if (f) {
                r.addressable = true;
                r.f_seq = *f;
                r.logp = config_log_probability(occ, params);
            }
            if (settings.baseline_t_total > 0.0)
                r.f_simple = simple_pulse_baseline_average(cfg, settings.baseline_t_total);
        }
    };

    int workers = settings.n_workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n_configs));
    if (workers == 1) {
        work(0, n_configs);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n_configs + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(n_configs, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    // Deterministic reductions: gather into index-ordered vectors first.
    std::vector<double> fs, ws, wfs, fsimple;
    fs.reserve(n_configs);
    double max_logp = -std::numeric_limits<double>::infinity();
    int non_addressable = 0;
    for (const auto& r : results) {
        if (!r.addressable) {
            ++non_addressable;
            continue;
        }
        fs.push_back(r.f_seq);
        if (r.logp > max_logp) max_logp = r.logp;
    }
    for (const auto& r : results) {
        if (!r.addressable) continue;
        const double w = std::exp(r.logp - max_logp);
        ws.push_back(w);
        wfs.push_back(w * r.f_seq);
    }
    if (settings.baseline_t_total > 0.0) {
        fsimple.reserve(n_configs);
        for (const auto& r : results) fsimple.push_back(r.f_simple);
    }

    FidelityReport report;
    report.n_configs = n_configs;
    report.n_non_addressable = non_addressable;
    report.estimator = settings.estimator;
    report.f_swap = settings.f_swap;

    const std::size_t n_ok = fs.size();
    if (n_ok > 0) {
        report.f_avg_mean = pairwise_sum(fs) / static_cast<double>(n_ok);
        const double wsum = pairwise_sum(ws);
        report.f_avg_weighted = pairwise_sum(wfs) / wsum;
        if (n_ok > 1) {
            std::vector<double> sq(n_ok), wsq(n_ok);
            for (std::size_t i = 0; i < n_ok; ++i) {
                const double d = fs[i] - report.f_avg_mean;
                sq[i] = d * d;
                const double dw = fs[i] - report.f_avg_weighted;
                wsq[i] = ws[i] * ws[i] * dw * dw;
            }
            report.standard_error =
                std::sqrt(pairwise_sum(sq) / (static_cast<double>(n_ok) * (n_ok - 1)));
            report.standard_error_weighted = std::sqrt(pairwise_sum(wsq)) / wsum;
        }
    }
    report.f_avg =
        settings.estimator == Estimator::mc_mean ? report.f_avg_mean : report.f_avg_weighted;

    if (settings.baseline_t_total > 0.0 && !fsimple.empty()) {
        report.f_avg_simple = pairwise_sum(fsimple) / static_cast<double>(fsimple.size());
        if (fsimple.size() > 1) {
            std::vector<double> sq(fsimple.size());
            for (std::size_t i = 0; i < fsimple.size(); ++i) {
                const double d = fsimple[i] - report.f_avg_simple;
                sq[i] = d * d;
            }
            report.standard_error_simple = std::sqrt(
                pairwise_sum(sq) / (static_cast<double>(fsimple.size()) * (fsimple.size() - 1)));
        }
    }

    // Representative first configuration for the per-bin detail fields.
    {
        const ArrayConfig cfg =
            sample_config(params, settings.n_qubits, CounterRng::substream(settings.seed, 0));
        const BinOccupancy occ = occupancy(cfg);
        for (const auto& [bin, count] : occ.counts)
            if (count > 0)
                report.f_loc[bin] = local_rotation_fidelity(occ, bin, drive_x, params.delta);
        const auto f = sequence_fidelity(occ, drive_x, drive_y, settings.f_swap, params.delta);
        report.f_seq = f.value_or(0.0);
    }
    return report;
}

}  // namespace spinaddr
