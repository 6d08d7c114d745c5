#include "spinaddr/drive.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinaddr {

namespace {
constexpr double kPi = std::numbers::pi;
}

double optimal_drive_strength(double delta, double theta, int ell) {
    if (ell < 1) throw std::invalid_argument("optimal_drive_strength: ell must be >= 1");
    if (!(theta > 0.0)) throw std::invalid_argument("optimal_drive_strength: theta must be > 0");
    if (ell <= theta / (2.0 * kPi))
        throw std::invalid_argument("optimal_drive_strength: need ell > theta/(2 pi)");
    return delta * theta / (2.0 * ell * kPi);
}

double exact_sync_strength(int m, double delta, double theta, int n) {
    if (m == 0) throw std::invalid_argument("exact_sync_strength: m must be nonzero");
    const double disc = (2.0 * n * kPi) * (2.0 * n * kPi) - theta * theta;
    if (!(disc > 0.0))
        throw std::invalid_argument("exact_sync_strength: need n > theta/(2 pi)");
    return std::abs(m) * delta * theta / std::sqrt(disc);
}

double rotation_step_duration(const DriveParams& drive) {
    if (!(drive.rabi > 0.0))
        throw std::invalid_argument("rotation_step_duration: rabi must be > 0");
    return std::abs(drive.angle) / drive.rabi;
}

Unitary2 off_resonant_unitary(double rabi, double detuning, double duration, Axis axis) {
    if (duration < 0.0) throw std::invalid_argument("off_resonant_unitary: negative duration");
    const double w = std::sqrt(rabi * rabi + detuning * detuning);
    const double half = w * duration / 2.0;
    const Complex mi{0.0, -1.0};
    if (w == 0.0 || duration == 0.0) return Unitary2::Identity();
    const Unitary2 gen = (rabi * pauli(axis) + detuning * pauli(Axis::Z)) / w;
    return std::cos(half) * Unitary2::Identity() + mi * std::sin(half) * gen;
}

double idle_fidelity(double rabi, double detuning, double duration) {
    const double w = std::sqrt(rabi * rabi + detuning * detuning);
    const double c = std::cos(w * duration / 2.0);
    return c * c;
}

DriveParams make_step_drive(double delta, double angle, int ell, Axis axis, int target_bin) {
    DriveParams d;
    d.axis = axis;
    d.angle = angle;
    d.ell = ell;
    d.target_bin = target_bin;
    d.duration = 2.0 * ell * kPi / delta;  // theta-independent step time
    d.rabi = (angle == 0.0) ? 0.0 : optimal_drive_strength(delta, std::abs(angle), ell);
    return d;
}

}  // namespace spinaddr
