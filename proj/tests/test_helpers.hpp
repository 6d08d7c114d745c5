#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinaddr/rng.hpp"
#include "spinaddr/su2.hpp"

namespace spinaddr::test {

/// Deterministic Haar-ish random SU(2) element (times a random global
/// phase when with_phase is set).
inline Unitary2 random_unitary(const CounterRng& rng, std::uint64_t idx, bool with_phase = true) {
    const double u1 = rng.uniform(4 * idx);
    const double u2 = rng.uniform(4 * idx + 1);
    const double u3 = rng.uniform(4 * idx + 2);
    const double a = std::acos(std::clamp(2.0 * u1 - 1.0, -1.0, 1.0));
    const double b = 2.0 * std::numbers::pi * u2;
    const Eigen::Vector3d axis{std::sin(a) * std::cos(b), std::sin(a) * std::sin(b), std::cos(a)};
    Unitary2 u = rotation(axis, 2.0 * std::numbers::pi * u3);
    if (with_phase) {
        const double ph = 2.0 * std::numbers::pi * rng.uniform(4 * idx + 3);
        u *= Complex{std::cos(ph), std::sin(ph)};
    }
    return u;
}

}  // namespace spinaddr::test
