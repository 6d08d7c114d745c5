#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "spinaddr/drive.hpp"
#include "spinaddr/spectrum.hpp"

namespace spinaddr {

enum class Estimator { mc_mean, paper_weighted };

struct FidelityReport {
    std::map<int, double> f_loc;  // per driven bin, for the representative (first) config
    double f_seq = 0.0;           // lower bound, representative config
    double f_avg = 0.0;           // selected estimator
    double f_avg_mean = 0.0;
    double f_avg_weighted = 0.0;
    double standard_error = 0.0;  // of the plain mean
    double standard_error_weighted = 0.0;
    double f_avg_simple = 0.0;    // simple-pulse baseline over the same configs
    double standard_error_simple = 0.0;
    int n_configs = 0;
    int n_non_addressable = 0;
    Estimator estimator = Estimator::mc_mean;
    double f_swap = 1.0;
};

/// One-step multi-qubit fidelity: product over occupied bins
/// j != 0 of the idle fidelity at detuning j*delta raised to the bin count.
double local_rotation_fidelity(const BinOccupancy& occ, int driven_bin, const DriveParams& drive,
                               double delta);

/// Sequence-fidelity lower bound: F_swap^4 sum_t sum_{k!=t}
/// (N_t/N)(N_k/(N-N_t)) F_loc(t)^2 F_loc(k)^2 over occupied bins.
/// nullopt when all qubits share one bin (non-addressable).
std::optional<double> sequence_fidelity(const BinOccupancy& occ, const DriveParams& drive,
                                        double f_swap, double delta);

/// Generalization with distinct x- and y-step drives (theta != phi).
std::optional<double> sequence_fidelity(const BinOccupancy& occ, const DriveParams& drive_x,
                                        const DriveParams& drive_y, double f_swap, double delta);

/// Naive comparison protocol: one resonant pulse of strength (pi/2)/t_total
/// at the target's raw frequency, every idle qubit pushed delta/2 further
/// away. Returns the product of per-idle fidelities with the pure-z part
/// absorbed (virtual-z correctable).
double simple_pulse_baseline(const ArrayConfig& config, int target_site, double t_total);

/// Baseline averaged uniformly over target sites.
double simple_pulse_baseline_average(const ArrayConfig& config, double t_total);

struct MonteCarloSettings {
    int n_qubits = 25;
    int n_configs = 10000;
    std::uint64_t seed = 1;
    Estimator estimator = Estimator::mc_mean;
    double theta = 0.0;  // defaults set from pi/2 in the constructor below
    double phi = 0.0;
    int ell = 4;
    double f_swap = 1.0;
    double baseline_t_total = 0.0;  // 0 = skip the baseline column
    int n_workers = 0;              // 0 = hardware concurrency

    MonteCarloSettings();
};

/// Sample n_configs arrays, evaluate the sequence bound per configuration,
/// and aggregate. Configuration i is drawn from sub-seed (seed, i), and all
/// reductions run pairwise in index order, so the report is identical for
/// any worker count.
FidelityReport monte_carlo_average(const SpectrumParams& params, const MonteCarloSettings& settings);

}  // namespace spinaddr
