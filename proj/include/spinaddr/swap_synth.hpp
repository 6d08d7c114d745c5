#pragma once

#include "spinaddr/su2.hpp"

namespace spinaddr {

/// One nearest-neighbor exchange link. delta_ez is the (signed) Zeeman
/// gradient between the two sites, ez_bar their mean Zeeman energy; all
/// in rad/us.
struct ExchangeLink {
    double j_max = 50.0;
    double delta_ez = 0.0;
    double ez_bar = 0.0;
};

/// Two-qubit Hamiltonian of a link at exchange value j:
///   j/4 (XX+YY+ZZ) + delta_ez/2 (IZ-ZI) + ez_bar (IZ+ZI).
Unitary4 pair_hamiltonian(double j, double delta_ez, double ez_bar);

/// Tilt of the rotation axis available with exchange on: arctan(2 dEz / J).
double effective_axis(const ExchangeLink& link);

struct CompositeZAngles {
    double phi_raw = 0.0;  // -2 asin(tan(gamma) sin(alpha/2))
    double chi_raw = 0.0;  // sgn(alpha) acos[...]
    double phi = 0.0;      // after +-2pi so sign matches the gradient
    double chi = 0.0;      // after +2pi so chi >= 0
};

/// Angles (phi, chi) of the three-segment composite
///   R(sin g x + cos g z, chi) R(x, phi) R(sin g x + cos g z, chi) = R(z, alpha)
/// (up to global sign). Throws if |tan(gamma) sin(alpha/2)| > 1.
CompositeZAngles composite_z_angles(double gamma, double alpha);

struct SwapPlan {
    double gamma = 0.0;
    double alpha_total = 0.0;  // signed; the sign is chosen to minimize time
    double alpha_piece = 0.0;
    int n_reps = 1;
    double phi = 0.0;
    double chi = 0.0;
    double outer_duration = 0.0;   // per repetition, each of the two outer segments
    double middle_duration = 0.0;  // per repetition, exchange off
    double total_duration = 0.0;

    double rep_duration() const { return 2.0 * outer_duration + middle_duration; }
};

/// Synthesize the n-fold composite realizing an effective z-rotation by
/// alpha_total from finite exchange. n is the smallest repetition count
/// keeping the composite angles real; of the two rotation senses the
/// cheaper one in total time is kept.
SwapPlan plan_swap(const ExchangeLink& link, double alpha_total);

/// Closed form n(2 chi cos g + phi cot g)/J; equals the segment sum.
double swap_duration_closed_form(const SwapPlan& plan, const ExchangeLink& link);

struct DirectSwapDuration {
    double nominal = 0.0;  // the pi/(2J) rule of thumb
    double oracle = 0.0;   // first SWAP-equivalence time of the Heisenberg evolution
};

/// Duration of a bare-exchange SWAP in the negligible-gradient regime,
/// both the nominal pi/(2J) closed form and a brute-force 4x4 scan
/// (which lands on twice that).
DirectSwapDuration direct_swap_duration(double j);

/// Effective z-rotation angle that maximizes SWAP-equivalence fidelity,
/// found once by scanning plans on a gradient-free reference link and
/// cached. The scan lands on pi.
double calibrated_alpha_total();

}  // namespace spinaddr
