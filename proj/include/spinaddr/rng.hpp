#pragma once

#include <cstdint>

namespace spinaddr {

/// Stateless counter-based generator: every value is a pure function of
/// (seed, counter), so parallel consumers can draw independent streams
/// without shared state and results never depend on thread scheduling.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Derive an independent sub-stream seed, e.g. one per Monte Carlo
    /// configuration index.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t bits(std::uint64_t counter) const;

    /// Uniform in the open interval (0, 1), 53-bit resolution.
    double uniform(std::uint64_t counter) const;

    /// Standard normal via the inverse-CDF method (deterministic across
    /// platforms; no libm transcendentals involved).
    double normal(std::uint64_t counter) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

/// Inverse of the standard normal CDF (Wichura's AS241 PPND16 rational
/// approximations), |relative error| < 1e-15 over (0, 1).
double inverse_normal_cdf(double p);

}  // namespace spinaddr
