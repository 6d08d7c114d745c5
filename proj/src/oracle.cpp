#include "spinaddr/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace spinaddr {

ExactSequenceResult simulate_sequence_exact(const SequencePlan& plan, const ArrayConfig& config,
                                            SwapMode swap_mode) {
    const int n = config.size();
    std::vector<int> site_of(n);
    for (int q = 0; q < n; ++q) site_of[q] = q;

    ExactSequenceResult out;
    out.net.assign(n, Unitary2::Identity());
    double swap_charge = 1.0;

    for (const SequenceStep& step : plan.steps) {
        if (const auto* rot = std::get_if<RotationStep>(&step)) {
            // Negative angles are phase-flipped drives: rabi sign follows
            // the angle, the detuning part is untouched.
            const double signed_rabi = rot->angle < 0.0 ? -rot->drive.rabi : rot->drive.rabi;
            const double drive_freq = config.bin_center(rot->bin);
            for (int q = 0; q < n; ++q) {
                const double detuning = config.qubits[site_of[q]].tuned_larmor - drive_freq;
                out.net[q] = off_resonant_unitary(signed_rabi, detuning, rot->drive.duration,
                                                  rot->axis) *
                             out.net[q];
            }
        } else {
            const auto& sw = std::get<SwapStep>(step);
            for (int q = 0; q < n; ++q) {
                if (site_of[q] == sw.left_site)
                    site_of[q] = sw.right_site();
                else if (site_of[q] == sw.right_site())
                    site_of[q] = sw.left_site;
            }
            if (swap_mode == SwapMode::synthesized) {
                if (!sw.plan)
                    throw std::invalid_argument(
                        "simulate_sequence_exact: synthesized mode needs swap plans");
                swap_charge *= verify_swap_plan(*sw.plan, sw.link).fidelity;
            }
        }
    }

    const Unitary2 target_intent = sequence_target_unitary(plan.theta, plan.phi);
    const Unitary2 identity = Unitary2::Identity();
    out.site_fidelity.resize(n);
    out.fidelity = swap_charge;
    for (int q = 0; q < n; ++q) {
        const Unitary2& intent = (q == plan.target_site) ? target_intent : identity;
        out.site_fidelity[q] = z_absorbed_fidelity(out.net[q], intent);
        out.fidelity *= out.site_fidelity[q];
    }
    return out;
}

Unitary4 swap_plan_unitary(const SwapPlan& plan, const ExchangeLink& link) {
    const Unitary4 outer =
        evolve_hermitian(pair_hamiltonian(link.j_max, link.delta_ez, link.ez_bar),
                         plan.outer_duration);
    const Unitary4 middle = evolve_hermitian(pair_hamiltonian(0.0, link.delta_ez, link.ez_bar),
                                             plan.middle_duration);
    const Unitary4 rep = outer * middle * outer;
    Unitary4 gate = Unitary4::Identity();
    for (int i = 0; i < plan.n_reps; ++i) gate = rep * gate;
    return gate;
}

SwapVerification verify_swap_plan(const SwapPlan& plan, const ExchangeLink& link) {
    const LocalZFit fit = equivalent_up_to_local_z(swap_plan_unitary(plan, link), swap_gate());
    SwapVerification v;
    v.fidelity = fit.fidelity;
    v.correction_angles = fit.angles;
    v.phase = fit.phase;
    return v;
}

}  // namespace spinaddr
