#pragma once

#include "spinaddr/su2.hpp"

namespace spinaddr {

/// One global-microwave step. Negative rotation angles are realized by a
/// phase-flipped drive (same |rabi| and duration, negated rotation axis);
/// the detuning part of the rotating-frame generator is unchanged.
struct DriveParams {
    double rabi = 0.0;      // rad/us, >= 0
    Axis axis = Axis::X;    // x or y
    double angle = 0.0;     // signed rotation angle, |angle| = rabi * duration
    double duration = 0.0;  // us
    int target_bin = 0;
    int ell = 4;
};

/// Bin-independent near-optimal drive strength delta*theta/(2*ell*pi).
double optimal_drive_strength(double delta, double theta, int ell);

/// Strength that makes the bin-m idle evolution close a full 2*n*pi
/// rotation (exact synchronization): m*delta*theta / sqrt((2n pi)^2 - theta^2).
double exact_sync_strength(int m, double delta, double theta, int n);

/// T = theta/rabi; with the optimal strength this is 2*ell*pi/delta for
/// any theta.
double rotation_step_duration(const DriveParams& drive);

/// Rotating-frame RWA evolution exp(-i T (rabi*A + detuning*Z)/2) with
/// A = X or Y, via the exact axis-angle form.
Unitary2 off_resonant_unitary(double rabi, double detuning, double duration, Axis axis = Axis::X);

/// |1/2 Tr U|^2 of the off-resonant unitary: cos^2(sqrt(rabi^2+det^2) T/2).
double idle_fidelity(double rabi, double detuning, double duration);

/// Build the DriveParams for one step of the addressing sequence: strength
/// from the optimal formula for |angle| (zero-angle steps keep the standard
/// step duration with the drive off).
DriveParams make_step_drive(double delta, double angle, int ell, Axis axis, int target_bin);

}  // namespace spinaddr
