#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace spinaddr {

/// All frequencies are angular, in rad/us; the CLI labels them "MHz"
/// (the conventional shorthand for these devices).
struct SpectrumParams {
    double omega0 = 0.0;      // center Larmor frequency
    double sigma = 60.0;      // std dev of the Larmor distribution
    double delta = 10.0;      // bin width
    double tunability = 5.0;  // max per-qubit shift; must cover delta/2

    void validate() const;

    /// All bin sums/products truncate at |j| <= this; the Gaussian tail
    /// beyond it is < 1e-14 of the mass.
    int bin_range() const;
};

struct QubitSpec {
    int site = 0;
    double raw_larmor = 0.0;
    int bin = 0;
    double tuned_larmor = 0.0;
};

struct ArrayConfig {
    SpectrumParams params;
    std::vector<QubitSpec> qubits;  // linear chain order, sites 0..N-1

    int size() const { return static_cast<int>(qubits.size()); }
    double bin_center(int bin) const { return params.omega0 + bin * params.delta; }
};

struct BinOccupancy {
    std::map<int, int> counts;
    int total = 0;

    int at(int bin) const {
        auto it = counts.find(bin);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Bin index for a raw frequency: round((raw - omega0)/delta), halves
/// away from zero.
int assign_bin(const SpectrumParams& params, double raw_larmor);

/// Draw n i.i.d. Normal(omega0, sigma^2) Larmor frequencies and bin them.
/// Bit-identical output for identical (params, n, seed).
ArrayConfig sample_config(const SpectrumParams& params, int n_qubits, std::uint64_t seed);

/// Build a config from explicit bin indices (raw frequencies set to the
/// bin centers). Used for fixtures.
ArrayConfig config_from_bins(const SpectrumParams& params, const std::vector<int>& bins);

BinOccupancy occupancy(const ArrayConfig& config);

/// Gaussian mass of bin j: P(omega in [omega0+(j-1/2)delta, omega0+(j+1/2)delta]).
double bin_probability(const SpectrumParams& params, int j);

/// log of the multinomial probability of an occupancy vector (log-space
/// via lgamma).
double config_log_probability(const BinOccupancy& occ, const SpectrumParams& params);

}  // namespace spinaddr
