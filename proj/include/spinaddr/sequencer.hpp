#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinaddr/drive.hpp"
#include "spinaddr/spectrum.hpp"
#include "spinaddr/su2.hpp"
#include "spinaddr/swap_synth.hpp"

namespace spinaddr {

struct RotationStep {
    int bin = 0;
    Axis axis = Axis::X;
    double angle = 0.0;
    DriveParams drive;
};

struct SwapStep {
    int left_site = 0;  // acts on the adjacent pair (left_site, left_site + 1)
    std::optional<SwapPlan> plan;  // nullopt = ideal swap
    ExchangeLink link;             // meaningful only when plan is set

    int right_site() const { return left_site + 1; }
    bool ideal() const { return !plan.has_value(); }
    double duration() const { return plan ? plan->total_duration : 0.0; }
};

using SequenceStep = std::variant<RotationStep, SwapStep>;

struct SequencePlan {
    std::vector<SequenceStep> steps;
    int target_site = 0;
    int partner_site = 0;
    double theta = 0.0;
    double phi = 0.0;
    // Virtual z-rotations: pre acts before the pulsed steps in time, post
    // after them, i.e. the synthesized gate is Z(post) * U_seq * Z(pre).
    double virtual_z_pre = 0.0;
    double virtual_z_post = 0.0;
    double total_duration = 0.0;
};

/// Shortest chain of adjacent sites from the target to a qubit in a
/// different bin (front = target, back = partner). Ties at equal distance
/// go to the lower site index. Throws if every qubit shares the target's
/// bin.
std::vector<int> choose_partner(const ArrayConfig& config, int target_site,
                                int min_bin_separation = 1);

/// The eight-step addressing sequence: x(theta) at the target bin, swap
/// out, y(phi) at the partner bin, swap back, then the two inverse
/// rotations with the same swaps. Multi-hop partners insert the full swap
/// chain in place of each single swap.
SequencePlan plan_sequence(const ArrayConfig& config, int target_site, double theta, double phi,
                           int ell);

/// Same, with swaps synthesized from an exchange link at the calibrated
/// (or given) effective rotation angle.
SequencePlan plan_sequence(const ArrayConfig& config, int target_site, double theta, double phi,
                           int ell, const ExchangeLink& link, double alpha_total);

/// Net rotation of the sequence on the target: Y(-phi) X(-theta) Y(phi) X(theta).
Unitary2 sequence_target_unitary(double theta, double phi);

/// Net-rotation Euler parameters for the phi = theta sequence.
double sequence_beta(double theta);
/// Largest beta reachable by a single sequence: 2 asin(3 sqrt(3) / (4 sqrt(2))).
double max_single_sequence_beta();
/// Inverse of sequence_beta on [0, 2pi/3] by bisection.
double solve_sequence_theta(double beta);

struct GateRequest {
    EulerZXZ euler;
    int target_site = 0;
};

struct GateSynthesis {
    std::vector<SequencePlan> plans;
    double bare_z = 0.0;  // used when no pulsed plan is needed (pure-z request)
};

/// Realize an arbitrary single-qubit gate: one theta=phi sequence plus
/// virtual z when beta is within reach, otherwise two theta=phi=pi/2
/// sequences with interleaved virtual z.
GateSynthesis synthesize_gate(const GateRequest& request, const ArrayConfig& config, int ell);

/// Recompose a synthesis result into the single-qubit gate it realizes on
/// the target (virtual z included), for verification.
Unitary2 synthesized_unitary(const GateSynthesis& synth);

/// Ideal per-logical-qubit evolution: driven-bin qubits rotate exactly,
/// swaps permute states. Index = logical qubit (initial site).
std::vector<Unitary2> ideal_bookkeeping(const SequencePlan& plan, const ArrayConfig& config);

/// The canonical six-qubit illustration: bins chosen so that sites 1 and 5
/// (1-based) share the target's bin and sites 2 and 4 share the partner's.
ArrayConfig table1_fixture();

/// Human-readable schedule (one line per step: kind, bin/sites, angle,
/// drive strength, duration).
std::string schedule_text(const SequencePlan& plan);

/// Table-style evolution rows, one per step: per site, the accumulated
/// state labels with the logical (initial-site) index, 1-based.
std::vector<std::string> bookkeeping_rows(const SequencePlan& plan, const ArrayConfig& config);

}  // namespace spinaddr
