#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace spinaddr {

using Complex = std::complex<double>;
using Unitary2 = Eigen::Matrix2cd;
using Unitary4 = Eigen::Matrix4cd;

inline constexpr double kUnitarityTol = 1e-12;

enum class Axis { X, Y, Z };

Unitary2 pauli(Axis axis);

/// exp(-i*angle/2 * n.sigma) for a named axis.
Unitary2 rotation(Axis axis, double angle);

/// exp(-i*angle/2 * n.sigma) for an arbitrary axis; |n| must be 1 within 1e-9.
Unitary2 rotation(const Eigen::Vector3d& axis, double angle);

/// Right-to-left product: the first element acts first in time.
Unitary2 compose(std::span<const Unitary2> gates);
Unitary2 compose(std::initializer_list<Unitary2> gates);

bool is_unitary(const Unitary2& u, double tol = kUnitarityTol);
bool is_unitary(const Unitary4& u, double tol = kUnitarityTol);

struct EulerZXZ {
    double alpha = 0.0;  // in (-pi, pi]
    double beta = 0.0;   // in [0, pi]
    double gamma = 0.0;  // in (-pi, pi]
};

struct EulerDecomposition {
    EulerZXZ angles;
    Complex phase{1.0, 0.0};  // phase * Z(alpha) X(beta) Z(gamma) == input
};

/// Z-X-Z Euler decomposition. Degenerate cases (beta = 0 or pi) put the
/// whole z-rotation into alpha and fix gamma = 0.
EulerDecomposition euler_zxz(const Unitary2& u);

Unitary2 from_euler(const EulerZXZ& e);

/// |Tr(U^dag V) / 2|^2 - phase-blind, 1 iff equal up to global phase.
double trace_gate_fidelity(const Unitary2& u, const Unitary2& v);
double trace_gate_fidelity4(const Unitary4& u, const Unitary4& v);

/// Trace fidelity after absorbing an optimal z-rotation, i.e.
/// max_w |Tr(Z_w U V^dag) / 2|^2. Used where z-errors are virtual-z
/// correctable.
double z_absorbed_fidelity(const Unitary2& u, const Unitary2& v);

/// Max-entry |A - phase*B| after aligning the global phase on the
/// largest-magnitude entry of B.
double max_abs_diff_up_to_phase(const Unitary2& a, const Unitary2& b);
double max_abs_diff_up_to_phase(const Unitary4& a, const Unitary4& b);

Unitary4 kron(const Unitary2& a, const Unitary2& b);
const Unitary4& swap_gate();

/// exp(-i t H) for Hermitian H via eigendecomposition.
Unitary4 evolve_hermitian(const Unitary4& h, double t);

struct LocalZFit {
    double fidelity = 0.0;
    // pre_a, pre_b act after the gate; post_c, post_d before it, i.e. the
    // corrected gate is (Z_a (x) Z_b) G (Z_c (x) Z_d).
    std::array<double, 4> angles{};
    Complex phase{1.0, 0.0};  // arg of Tr(target^dag corrected)
    bool converged = false;
};

/// Maximizes |Tr(target^dag (Z_a (x) Z_b) G (Z_c (x) Z_d)) / 4|^2 over the
/// four z-angles. Grid seed over three independent angles, then exact
/// per-coordinate ascent (each coordinate has a closed-form optimum).
LocalZFit equivalent_up_to_local_z(const Unitary4& gate, const Unitary4& target);

}  // namespace spinaddr
