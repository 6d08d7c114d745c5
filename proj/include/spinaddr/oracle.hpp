#pragma once

#include <vector>

#include "spinaddr/sequencer.hpp"
#include "spinaddr/su2.hpp"

namespace spinaddr {

enum class SwapMode { ideal, synthesized };

struct ExactSequenceResult {
    std::vector<Unitary2> net;          // per logical qubit
    std::vector<double> site_fidelity;  // vs intent, z-rotations absorbed
    double fidelity = 0.0;              // product over sites (x swap charges)
};

/// Brute-force per-qubit propagation of a sequence plan: every rotation
/// step applies the full off-resonant rotating-frame unitary at each
/// logical qubit's current site detuning; swap steps permute the
/// logical-to-site assignment. In synthesized mode each swap additionally
/// charges the plan's SWAP-equivalence fidelity (its local-z corrections
/// are frame changes and the entangling residual enters as a scalar
/// factor). Intent: the net sequence rotation on the target, identity
/// elsewhere.
ExactSequenceResult simulate_sequence_exact(const SequencePlan& plan, const ArrayConfig& config,
                                            SwapMode swap_mode);

struct SwapVerification {
    double fidelity = 0.0;  // to SWAP, up to local z and global phase
    std::array<double, 4> correction_angles{};
    Complex phase{1.0, 0.0};
};

/// Exact 4x4 propagation of a swap plan's segments under the full pair
/// Hamiltonian (u(1) part included), checked against SWAP up to local z.
SwapVerification verify_swap_plan(const SwapPlan& plan, const ExchangeLink& link);

/// The composed 4x4 gate of a swap plan (n repetitions of
/// outer/middle/outer at the link's parameters).
Unitary4 swap_plan_unitary(const SwapPlan& plan, const ExchangeLink& link);

}  // namespace spinaddr
