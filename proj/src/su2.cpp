#include "spinaddr/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinaddr {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double wrap_angle(double a) {
    // into (-pi, pi]
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

}  // namespace

Unitary2 pauli(Axis axis) {
    Unitary2 m;
    switch (axis) {
        case Axis::X: m << 0, 1, 1, 0; break;
        case Axis::Y: m << 0, -kI, kI, 0; break;
        case Axis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Unitary2 rotation(Axis axis, double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("rotation: non-finite angle");
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return c * Unitary2::Identity() - kI * s * pauli(axis);
}

Unitary2 rotation(const Eigen::Vector3d& axis, double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("rotation: non-finite angle");
    if (std::abs(axis.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("rotation: axis must be a unit vector");
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    Unitary2 g = axis.x() * pauli(Axis::X) + axis.y() * pauli(Axis::Y) + axis.z() * pauli(Axis::Z);
    return c * Unitary2::Identity() - kI * s * g;
}

Unitary2 compose(std::span<const Unitary2> gates) {
    if (gates.empty()) throw std::invalid_argument("compose: empty list");
    Unitary2 acc = gates[0];
    for (std::size_t i = 1; i < gates.size(); ++i) acc = gates[i] * acc;
    return acc;
}

Unitary2 compose(std::initializer_list<Unitary2> gates) {
    std::vector<Unitary2> v(gates);
    return compose(std::span<const Unitary2>(v));
}

bool is_unitary(const Unitary2& u, double tol) {
    return ((u.adjoint() * u) - Unitary2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Unitary4& u, double tol) {
    return ((u.adjoint() * u) - Unitary4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

EulerDecomposition euler_zxz(const Unitary2& u) {
    if (!is_unitary(u, 1e-9)) throw std::invalid_argument("euler_zxz: input not unitary");
    // Strip the global phase so we work in SU(2).
    const Complex det = u.determinant();
    const Unitary2 v = u / std::sqrt(det);

    const double a00 = std::abs(v(0, 0));
    const double a10 = std::abs(v(1, 0));
    double alpha, beta, gamma;
    beta = 2.0 * std::atan2(a10, a00);
    constexpr double kDegenerate = 1e-12;
    if (a10 <= kDegenerate) {
        // beta ~ 0: v = diag(e^{-i(alpha+gamma)/2}, ...); put it all in alpha.
        beta = 0.0;
        alpha = wrap_angle(-2.0 * std::arg(v(0, 0)));
        gamma = 0.0;
    } else if (a00 <= kDegenerate) {
        // beta ~ pi: v(1,0) = -i e^{i(alpha-gamma)/2}.
        beta = kPi;
        alpha = wrap_angle(2.0 * (std::arg(v(1, 0)) + kPi / 2.0));
        gamma = 0.0;
    } else {
        const double sum = -2.0 * std::arg(v(0, 0));
        const double diff = 2.0 * (std::arg(v(1, 0)) + kPi / 2.0);
        alpha = wrap_angle((sum + diff) / 2.0);
        gamma = wrap_angle((sum - diff) / 2.0);
    }

    EulerDecomposition out;
    out.angles = {alpha, beta, gamma};
    // Recover the exact residual phase by aligning the largest entry.
    const Unitary2 w = from_euler(out.angles);
    Eigen::Index r, c;
    w.cwiseAbs().maxCoeff(&r, &c);
    out.phase = u(r, c) / w(r, c);
    return out;
}

Unitary2 from_euler(const EulerZXZ& e) {
    return rotation(Axis::Z, e.alpha) * rotation(Axis::X, e.beta) * rotation(Axis::Z, e.gamma);
}

double trace_gate_fidelity(const Unitary2& u, const Unitary2& v) {
    const Complex t = (u.adjoint() * v).trace() / 2.0;
    return std::norm(t);
}

double trace_gate_fidelity4(const Unitary4& u, const Unitary4& v) {
    const Complex t = (u.adjoint() * v).trace() / 4.0;
    return std::norm(t);
}

double z_absorbed_fidelity(const Unitary2& u, const Unitary2& v) {
    // max_w |Tr(Z_w D)/2|^2 with D = u v^dag equals ((|D00|+|D11|)/2)^2.
    const Unitary2 d = u * v.adjoint();
    const double m = (std::abs(d(0, 0)) + std::abs(d(1, 1))) / 2.0;
    return m * m;
}

namespace {

template <typename Mat>
double max_abs_diff_aligned(const Mat& a, const Mat& b) {
    Eigen::Index r, c;
    b.cwiseAbs().maxCoeff(&r, &c);
    const Complex ph = a(r, c) / b(r, c);
    const Complex scale = std::abs(ph) > 0 ? ph / std::abs(ph) : Complex{1.0, 0.0};
    return (a - scale * b).cwiseAbs().maxCoeff();
}

}  // namespace

double max_abs_diff_up_to_phase(const Unitary2& a, const Unitary2& b) {
    return max_abs_diff_aligned(a, b);
}

double max_abs_diff_up_to_phase(const Unitary4& a, const Unitary4& b) {
    return max_abs_diff_aligned(a, b);
}

Unitary4 kron(const Unitary2& a, const Unitary2& b) {
    Unitary4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

const Unitary4& swap_gate() {
    static const Unitary4 s = [] {
        Unitary4 m = Unitary4::Zero();
        m(0, 0) = 1;
        m(1, 2) = 1;
        m(2, 1) = 1;
        m(3, 3) = 1;
        return m;
    }();
    return s;
}

Unitary4 evolve_hermitian(const Unitary4& h, double t) {
    Eigen::SelfAdjointEigenSolver<Unitary4> es(h);
    Eigen::Vector4cd phases;
    for (int i = 0; i < 4; ++i) phases(i) = std::exp(-kI * es.eigenvalues()(i) * t);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

// Objective f(a,b,c,d) = sum_ij conj(T_ij) p_i(a,b) G_ij q_j(c,d) with
// p = diag(Z_a (x) Z_b), q = diag(Z_c (x) Z_d). Each angle enters as
// f = e^{-i x/2} P + e^{+i x/2} Q over a fixed row/column split, so the
// per-coordinate optimum is x = arg(P) - arg(Q), worth |P| + |Q|.
struct LocalZObjective {
    Unitary4 w;  // w_ij = conj(T_ij) * G_ij

    static std::array<Complex, 4> half_phases(double a, double b) {
        const double u = (a + b) / 2.0, v = (a - b) / 2.0;
        return {std::exp(Complex(0, -u)), std::exp(Complex(0, -v)), std::exp(Complex(0, v)),
                std::exp(Complex(0, u))};
    }

    Complex eval(const std::array<double, 4>& ang) const {
        const auto p = half_phases(ang[0], ang[1]);
        const auto q = half_phases(ang[2], ang[3]);
        Complex f = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) f += w(i, j) * p[i] * q[j];
        return f;
    }

    // Which of the four diagonal slots carry e^{-i x/2} for each angle.
    static bool negative_slot(int angle_idx, int slot) {
        switch (angle_idx) {
            case 0: return slot < 2;               // a: slots 0,1
            case 1: return slot == 0 || slot == 2; // b: slots 0,2
            case 2: return slot < 2;               // c: columns 0,1
            default: return slot == 0 || slot == 2;
        }
    }

    void ascend_coordinate(std::array<double, 4>& ang, int k) const {
        const auto p = half_phases(ang[0], ang[1]);
        const auto q = half_phases(ang[2], ang[3]);
        Complex pos = 0, neg = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                Complex term = w(i, j) * p[i] * q[j];
                const int slot = (k < 2) ? i : j;
                // strip this angle's phase factor from the term
                const double half = ang[k] / 2.0;
                if (negative_slot(k, slot)) {
                    term *= std::exp(Complex(0, half));
                    neg += term;
                } else {
                    term *= std::exp(Complex(0, -half));
                    pos += term;
                }
            }
        }
        // f(x) = e^{-ix/2} neg + e^{+ix/2} pos; maximum at:
        ang[k] = std::arg(neg) - std::arg(pos);
    }
};

}  // namespace

LocalZFit equivalent_up_to_local_z(const Unitary4& gate, const Unitary4& target) {
    LocalZObjective obj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) obj.w(i, j) = std::conj(target(i, j)) * gate(i, j);

    // Coarse 16^3 grid over (a, b, c) with d = 0, keep the best few seeds.
    constexpr int kGrid = 16;
    constexpr int kSeeds = 8;
    std::array<std::pair<double, std::array<double, 4>>, kSeeds> seeds{};
    for (auto& s : seeds) s.first = -1.0;
    for (int ia = 0; ia < kGrid; ++ia) {
        for (int ib = 0; ib < kGrid; ++ib) {
            for (int ic = 0; ic < kGrid; ++ic) {
                std::array<double, 4> ang = {2.0 * std::numbers::pi * ia / kGrid,
                                             2.0 * std::numbers::pi * ib / kGrid,
                                             2.0 * std::numbers::pi * ic / kGrid, 0.0};
                const double val = std::abs(obj.eval(ang));
                auto worst = std::min_element(seeds.begin(), seeds.end(),
                                              [](auto& x, auto& y) { return x.first < y.first; });
                if (val > worst->first) *worst = {val, ang};
            }
        }
    }

    LocalZFit best;
    for (const auto& [seed_val, seed_ang] : seeds) {
        if (seed_val < 0) continue;
        std::array<double, 4> ang = seed_ang;
        double prev = -1.0;
        bool converged = false;
        for (int sweep = 0; sweep < 500; ++sweep) {
            for (int k = 0; k < 4; ++k) obj.ascend_coordinate(ang, k);
            const double cur = std::abs(obj.eval(ang));
            if (cur - prev <= 1e-15 * std::max(1.0, cur)) {
                converged = true;
                break;
            }
            prev = cur;
        }
        const Complex f = obj.eval(ang);
        const double fid = std::norm(f / 4.0);
        if (fid > best.fidelity) {
            best.fidelity = fid;
            best.angles = ang;
            best.phase = std::abs(f) > 0 ? f / std::abs(f) : Complex{1.0, 0.0};
            best.converged = converged;
        }
    }
    return best;
}

}  // namespace spinaddr
