#include "spinaddr/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "spinaddr/rng.hpp"

namespace spinaddr {

void SpectrumParams::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("SpectrumParams: delta must be > 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("SpectrumParams: sigma must be > 0");
    if (tunability < delta / 2.0)
        throw std::invalid_argument("SpectrumParams: tunability must cover delta/2");
}

int SpectrumParams::bin_range() const {
    return static_cast<int>(std::ceil(8.0 * sigma / delta));
}

int assign_bin(const SpectrumParams& params, double raw_larmor) {
    // std::round is round-half-away-from-zero.
    return static_cast<int>(std::round((raw_larmor - params.omega0) / params.delta));
}

ArrayConfig sample_config(const SpectrumParams& params, int n_qubits, std::uint64_t seed) {
    params.validate();
    if (n_qubits < 1) throw std::invalid_argument("sample_config: need at least one qubit");
    CounterRng rng(seed);
    ArrayConfig cfg;
    cfg.params = params;
    cfg.qubits.resize(n_qubits);
    for (int i = 0; i < n_qubits; ++i) {
        QubitSpec& q = cfg.qubits[i];
        q.site = i;
        q.raw_larmor = params.omega0 + params.sigma * rng.normal(static_cast<std::uint64_t>(i));
        q.bin = assign_bin(params, q.raw_larmor);
        q.tuned_larmor = params.omega0 + q.bin * params.delta;
    }
    return cfg;
}

ArrayConfig config_from_bins(const SpectrumParams& params, const std::vector<int>& bins) {
    params.validate();
    ArrayConfig cfg;
    cfg.params = params;
    cfg.qubits.resize(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        QubitSpec& q = cfg.qubits[i];
        q.site = static_cast<int>(i);
        q.bin = bins[i];
        q.tuned_larmor = params.omega0 + bins[i] * params.delta;
        q.raw_larmor = q.tuned_larmor;
    }
    return cfg;
}

BinOccupancy occupancy(const ArrayConfig& config) {
    BinOccupancy occ;
    for (const auto& q : config.qubits) {
        ++occ.counts[q.bin];
        ++occ.total;
    }
    return occ;
}

double bin_probability(const SpectrumParams& params, int j) {
    const double lo = (j - 0.5) * params.delta / params.sigma;
    const double hi = (j + 0.5) * params.delta / params.sigma;
    const double inv_sqrt2 = 0.7071067811865475244;
    return 0.5 * (std::erf(hi * inv_sqrt2) - std::erf(lo * inv_sqrt2));
}

double config_log_probability(const BinOccupancy& occ, const SpectrumParams& params) {
    // Product over bins of p_j^{N_j} times the binomial ladder,
    // which telescopes to the multinomial coefficient N!/prod N_j!.
    double logp = std::lgamma(static_cast<double>(occ.total) + 1.0);
    for (const auto& [bin, n] : occ.counts) {
        if (n < 0) throw std::invalid_argument("config_log_probability: negative count");
        if (n == 0) continue;
        logp -= std::lgamma(static_cast<double>(n) + 1.0);
        logp += n * std::log(bin_probability(params, bin));
    }
    return logp;
}

}  // namespace spinaddr
