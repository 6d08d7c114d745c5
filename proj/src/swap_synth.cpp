#include "spinaddr/swap_synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace spinaddr {

namespace {

constexpr double kPi = std::numbers::pi;

Unitary4 heisenberg_evolution(double j, double t) {
    return evolve_hermitian(pair_hamiltonian(j, 0.0, 0.0), t);
}

double swap_equivalence_fidelity(const Unitary4& gate) {
    return equivalent_up_to_local_z(gate, swap_gate()).fidelity;
}

}  // namespace

Unitary4 pair_hamiltonian(double j, double delta_ez, double ez_bar) {
    const Unitary2 x = pauli(Axis::X), y = pauli(Axis::Y), z = pauli(Axis::Z);
    const Unitary2 id = Unitary2::Identity();
    Unitary4 h = (j / 4.0) * (kron(x, x) + kron(y, y) + kron(z, z));
    h += (delta_ez / 2.0) * (kron(id, z) - kron(z, id));
    h += ez_bar * (kron(id, z) + kron(z, id));
    return h;
}

double effective_axis(const ExchangeLink& link) {
    if (!(link.j_max > 0.0)) throw std::invalid_argument("effective_axis: j_max must be > 0");
    return std::atan2(2.0 * link.delta_ez, link.j_max);
}

CompositeZAngles composite_z_angles(double gamma, double alpha) {
    const double tg = std::tan(gamma);
    const double arg = tg * std::sin(alpha / 2.0);
    if (std::abs(arg) > 1.0 + 1e-12)
        throw std::invalid_argument("composite_z_angles: |tan(gamma) sin(alpha/2)| > 1");

    CompositeZAngles out;
    out.phi_raw = -2.0 * std::asin(std::clamp(arg, -1.0, 1.0));

    const double c2 = std::cos(alpha / 2.0) * std::cos(alpha / 2.0);
    const double s2 = std::sin(alpha / 2.0) * std::sin(alpha / 2.0);
    double inner = c2 - 0.25 * std::sin(alpha) * std::sin(alpha) * tg * tg;
    if (inner < -1e-12)
        throw std::invalid_argument("composite_z_angles: reality condition violated");
    inner = std::max(inner, 0.0);
    const double denom = c2 + s2 * std::cos(gamma) * std::cos(gamma);
    const double val = std::clamp(1.0 - (1.0 - std::sqrt(inner)) / denom, -1.0, 1.0);
    const double sgn = (alpha >= 0.0) ? 1.0 : -1.0;
    out.chi_raw = sgn * std::acos(val);

    out.chi = out.chi_raw < 0.0 ? out.chi_raw + 2.0 * kPi : out.chi_raw;
    out.phi = out.phi_raw;
    if (gamma > 0.0 && out.phi < 0.0) out.phi += 2.0 * kPi;
    if (gamma < 0.0 && out.phi > 0.0) out.phi -= 2.0 * kPi;
    if (gamma == 0.0) out.phi = 0.0;
    return out;
}

namespace {

SwapPlan build_plan(const ExchangeLink& link, double alpha_signed) {
    const double gamma = effective_axis(link);
    const double amag = std::abs(alpha_signed);
    const double cot = std::abs(std::tan(gamma)) > 0.0 ? 1.0 / std::abs(std::tan(gamma))
                                                       : std::numeric_limits<double>::infinity();
    int n = 1;
    if (cot < 1.0) {
        n = std::max(1, static_cast<int>(std::ceil(amag / (2.0 * std::asin(cot)))));
    }
    while (std::abs(std::tan(gamma) * std::sin(alpha_signed / (2.0 * n))) > 1.0) ++n;

    SwapPlan plan;
    plan.gamma = gamma;
    plan.alpha_total = alpha_signed;
    plan.n_reps = n;
    plan.alpha_piece = alpha_signed / n;
    const CompositeZAngles ang = composite_z_angles(gamma, plan.alpha_piece);
    plan.phi = ang.phi;
    plan.chi = ang.chi;

    const double r = std::sqrt(link.j_max * link.j_max / 4.0 + link.delta_ez * link.delta_ez);
    plan.outer_duration = plan.chi / (2.0 * r);
    plan.middle_duration = (link.delta_ez != 0.0) ? plan.phi / (2.0 * link.delta_ez) : 0.0;
    plan.total_duration = n * plan.rep_duration();
    return plan;
}

}  // namespace

SwapPlan plan_swap(const ExchangeLink& link, double alpha_total) {
    if (!(link.j_max > 0.0)) throw std::invalid_argument("plan_swap: j_max must be > 0");
    if (alpha_total == 0.0) throw std::invalid_argument("plan_swap: alpha_total must be nonzero");
    // Either rotation sense gives the same effective z-rotation up to sign;
    // the sign fixups make their durations very different, so take the
    // cheaper one.
    const SwapPlan plus = build_plan(link, std::abs(alpha_total));
    const SwapPlan minus = build_plan(link, -std::abs(alpha_total));
    return plus.total_duration <= minus.total_duration ? plus : minus;
}

double swap_duration_closed_form(const SwapPlan& plan, const ExchangeLink& link) {
    if (plan.gamma == 0.0) return plan.n_reps * 2.0 * plan.outer_duration;
    return plan.n_reps *
           (2.0 * plan.chi * std::cos(plan.gamma) + plan.phi / std::tan(plan.gamma)) / link.j_max;
}

DirectSwapDuration direct_swap_duration(double j) {
    if (!(j > 0.0)) throw std::invalid_argument("direct_swap_duration: j must be > 0");
    DirectSwapDuration out;
    out.nominal = kPi / (2.0 * j);

    // Scan the Heisenberg evolution for its first SWAP-equivalence time,
    // then polish with a golden-section pass.
    const double tmax = 1.5 * 2.0 * kPi / j;
    const int steps = 600;
    double t_hit = tmax;
    for (int i = 1; i <= steps; ++i) {
        const double t = tmax * i / steps;
        if (swap_equivalence_fidelity(heisenberg_evolution(j, t)) > 0.9999) {
            t_hit = t;
            break;
        }
    }
    double lo = std::max(0.0, t_hit - 2.0 * tmax / steps), hi = t_hit + 2.0 * tmax / steps;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80; ++it) {
        const double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
        const double f1 = swap_equivalence_fidelity(heisenberg_evolution(j, m1));
        const double f2 = swap_equivalence_fidelity(heisenberg_evolution(j, m2));
        if (f1 < f2)
            lo = m1;
        else
            hi = m2;
    }
    out.oracle = (lo + hi) / 2.0;
    return out;
}

double calibrated_alpha_total() {
    static double cached = 0.0;
    static std::once_flag flag;
    std::call_once(flag, [] {
        // Gradient-free reference link: the plan gate is the bare exchange
        // evolution with total exchange angle alpha, so the scan is exact.
        const ExchangeLink ref{50.0, 0.0, 0.0};
        double best_alpha = kPi, best_fid = -1.0;
        const int steps = 512;
        for (int i = 1; i <= steps; ++i) {
            const double alpha = 2.0 * kPi * i / steps;
            const SwapPlan p = plan_swap(ref, alpha);
            const double fid = swap_equivalence_fidelity(
                heisenberg_evolution(ref.j_max, p.total_duration));
            if (fid > best_fid) {
                best_fid = fid;
                best_alpha = alpha;
            }
        }
        double lo = best_alpha - 2.0 * kPi / steps, hi = best_alpha + 2.0 * kPi / steps;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 100; ++it) {
            const double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
            const auto fid_at = [&](double a) {
                const SwapPlan p = plan_swap(ref, a);
                return swap_equivalence_fidelity(heisenberg_evolution(ref.j_max, p.total_duration));
            };
            if (fid_at(m1) < fid_at(m2))
                lo = m1;
            else
                hi = m2;
        }
        cached = (lo + hi) / 2.0;
    });
    return cached;
}

}  // namespace spinaddr
