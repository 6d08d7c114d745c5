#include "spinaddr/sequencer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spinaddr {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

}  // namespace

std::vector<int> choose_partner(const ArrayConfig& config, int target_site,
                                int min_bin_separation) {
    const int n = config.size();
    if (target_site < 0 || target_site >= n)
        throw std::invalid_argument("choose_partner: target site out of range");
    if (n < 2) throw std::runtime_error("choose_partner: need at least two qubits");
    const int tbin = config.qubits[target_site].bin;
    const auto distinct = [&](int site) {
        return std::abs(config.qubits[site].bin - tbin) >= min_bin_separation;
    };
    for (int d = 1; d < n; ++d) {
        for (const int site : {target_site - d, target_site + d}) {
            if (site < 0 || site >= n || !distinct(site)) continue;
            std::vector<int> path;
            const int step = site > target_site ? 1 : -1;
            for (int s = target_site; s != site + step; s += step) path.push_back(s);
            return path;
        }
    }
    throw std::runtime_error("choose_partner: all qubits share the target's bin");
}

namespace {

SequencePlan plan_sequence_impl(const ArrayConfig& config, int target_site, double theta,
                                double phi, int ell, const std::optional<SwapPlan>& swap_plan,
                                const ExchangeLink& link) {
    const std::vector<int> path = choose_partner(config, target_site);
    const int partner = path.back();
    const int tbin = config.qubits[target_site].bin;
    const int pbin = config.qubits[partner].bin;
    const double delta = config.params.delta;

    SequencePlan plan;
    plan.target_site = target_site;
    plan.partner_site = partner;
    plan.theta = theta;
    plan.phi = phi;

    const auto add_rot = [&](int bin, Axis axis, double angle) {
        RotationStep r;
        r.bin = bin;
        r.axis = axis;
        r.angle = angle;
        r.drive = make_step_drive(delta, angle, ell, axis, bin);
        plan.steps.emplace_back(r);
        plan.total_duration += r.drive.duration;
    };
    const auto add_chain_out = [&] {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            SwapStep s;
            s.left_site = std::min(path[i], path[i + 1]);
            s.plan = swap_plan;
            s.link = link;
            plan.total_duration += s.duration();
            plan.steps.emplace_back(s);
        }
    };
    const auto add_chain_back = [&] {
        for (std::size_t i = path.size() - 1; i >= 1; --i) {
            SwapStep s;
            s.left_site = std::min(path[i - 1], path[i]);
            s.plan = swap_plan;
            s.link = link;
            plan.total_duration += s.duration();
            plan.steps.emplace_back(s);
        }
    };

    add_rot(tbin, Axis::X, theta);
    add_chain_out();
    add_rot(pbin, Axis::Y, phi);
    add_chain_back();
    add_rot(tbin, Axis::X, -theta);
    add_chain_out();
    add_rot(pbin, Axis::Y, -phi);
    add_chain_back();
    return plan;
}

}  // namespace

SequencePlan plan_sequence(const ArrayConfig& config, int target_site, double theta, double phi,
                           int ell) {
    return plan_sequence_impl(config, target_site, theta, phi, ell, std::nullopt, ExchangeLink{});
}

SequencePlan plan_sequence(const ArrayConfig& config, int target_site, double theta, double phi,
                           int ell, const ExchangeLink& link, double alpha_total) {
    return plan_sequence_impl(config, target_site, theta, phi, ell, plan_swap(link, alpha_total),
                              link);
}

Unitary2 sequence_target_unitary(double theta, double phi) {
    return rotation(Axis::Y, -phi) * rotation(Axis::X, -theta) * rotation(Axis::Y, phi) *
           rotation(Axis::X, theta);
}

double sequence_beta(double theta) {
    return 2.0 * std::asin(std::numbers::sqrt2 * std::sin(theta / 2.0) * std::sin(theta / 2.0) *
                           std::sin(theta));
}

double max_single_sequence_beta() {
    return 2.0 * std::asin(3.0 * std::sqrt(3.0) / (4.0 * std::numbers::sqrt2));
}

double solve_sequence_theta(double beta) {
    if (beta < 0.0 || beta > max_single_sequence_beta() + 1e-12)
        throw std::invalid_argument("solve_sequence_theta: beta out of range");
    double lo = 0.0, hi = 2.0 * kPi / 3.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = (lo + hi) / 2.0;
        if (sequence_beta(mid) < beta)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15) break;
    }
    return (lo + hi) / 2.0;
}

GateSynthesis synthesize_gate(const GateRequest& request, const ArrayConfig& config, int ell) {
    // Renormalize so beta lands in [0, pi] whatever the caller passed.
    const EulerZXZ e = euler_zxz(from_euler(request.euler)).angles;
    GateSynthesis out;

    if (e.beta < 1e-12) {
        out.bare_z = wrap_angle(e.alpha + e.gamma);
        return out;
    }

    const double beta_max = max_single_sequence_beta();
    if (e.beta <= beta_max + 1e-12) {
        const double theta = solve_sequence_theta(std::min(e.beta, beta_max));
        SequencePlan plan = plan_sequence(config, request.target_site, theta, theta, ell);
        const EulerDecomposition seq = euler_zxz(sequence_target_unitary(theta, theta));
        plan.virtual_z_pre = wrap_angle(e.gamma - seq.angles.gamma);
        plan.virtual_z_post = wrap_angle(e.alpha - seq.angles.alpha);
        out.plans.push_back(std::move(plan));
        return out;
    }

    // Large beta: Z X(pi/2) Z X(pi/2) Z with the sequence providing the
    // X(pi/2) pulses (it realizes Z(-pi/2) X(pi/2) exactly).
    SequencePlan first = plan_sequence(config, request.target_site, kPi / 2.0, kPi / 2.0, ell);
    SequencePlan second = first;
    first.virtual_z_pre = wrap_angle(e.gamma - kPi / 2.0);
    first.virtual_z_post = wrap_angle(3.0 * kPi / 2.0 - e.beta);
    second.virtual_z_pre = 0.0;
    second.virtual_z_post = wrap_angle(e.alpha);
    out.plans.push_back(std::move(first));
    out.plans.push_back(std::move(second));
    return out;
}

Unitary2 synthesized_unitary(const GateSynthesis& synth) {
    Unitary2 u = rotation(Axis::Z, synth.plans.empty() ? synth.bare_z : 0.0);
    for (const SequencePlan& p : synth.plans) {
        u = rotation(Axis::Z, p.virtual_z_pre) * u;
        u = sequence_target_unitary(p.theta, p.phi) * u;
        u = rotation(Axis::Z, p.virtual_z_post) * u;
    }
    return u;
}

std::vector<Unitary2> ideal_bookkeeping(const SequencePlan& plan, const ArrayConfig& config) {
    const int n = config.size();
    std::vector<int> site_of(n);  // logical qubit -> current site
    for (int q = 0; q < n; ++q) site_of[q] = q;
    std::vector<Unitary2> net(n, Unitary2::Identity());

    for (const SequenceStep& step : plan.steps) {
        if (const auto* rot = std::get_if<RotationStep>(&step)) {
            for (int q = 0; q < n; ++q) {
                if (config.qubits[site_of[q]].bin == rot->bin)
                    net[q] = rotation(rot->axis, rot->angle) * net[q];
            }
        } else {
            const auto& sw = std::get<SwapStep>(step);
            for (int q = 0; q < n; ++q) {
                if (site_of[q] == sw.left_site)
                    site_of[q] = sw.right_site();
                else if (site_of[q] == sw.right_site())
                    site_of[q] = sw.left_site;
            }
        }
    }
    return net;
}

ArrayConfig table1_fixture() {
    SpectrumParams params;  // defaults: delta 10, sigma 60
    // Sites 1..6 (1-based); sites 1 and 5 share bin 1 (the target bin),
    // sites 2 and 4 share bin 3 (partner bin), the rest sit alone.
    return config_from_bins(params, {1, 3, 0, 3, 1, 5});
}

namespace {

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        default: return "z";
    }
}

// Compact state label for one rotation, Table-style: X_t / X_-t / Y_p / Y_-p.
std::string rotation_label(Axis axis, double angle, double theta, double phi) {
    std::string name = (axis == Axis::X) ? "X" : "Y";
    const double ref = (axis == Axis::X) ? theta : phi;
    const char* sym = (axis == Axis::X) ? "t" : "p";
    if (angle == ref) return name + "_" + sym;
    if (angle == -ref) return name + "_-" + sym;
    std::ostringstream os;
    os << name << "(" << angle << ")";
    return os.str();
}

}  // namespace

std::string schedule_text(const SequencePlan& plan) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    int idx = 1;
    for (const SequenceStep& step : plan.steps) {
        os << "step " << idx++ << ": ";
        if (const auto* rot = std::get_if<RotationStep>(&step)) {
            os << "rotate bin " << rot->bin << " about " << axis_name(rot->axis) << " by "
               << rot->angle << " rad, Omega = " << rot->drive.rabi
               << " MHz, T = " << rot->drive.duration << " us\n";
        } else {
            const auto& sw = std::get<SwapStep>(step);
            os << "swap sites (" << sw.left_site << ", " << sw.right_site() << ")";
            if (sw.ideal())
                os << ", ideal\n";
            else
                os << ", T = " << sw.duration() << " us\n";
        }
    }
    os << "total duration: " << plan.total_duration << " us\n";
    return os.str();
}

std::vector<std::string> bookkeeping_rows(const SequencePlan& plan, const ArrayConfig& config) {
    const int n = config.size();
    std::vector<int> site_of(n);
    for (int q = 0; q < n; ++q) site_of[q] = q;
    // Accumulated labels per logical qubit, newest first.
    std::vector<std::vector<std::string>> labels(n);

    std::vector<std::string> rows;
    for (const SequenceStep& step : plan.steps) {
        std::ostringstream row;
        if (const auto* rot = std::get_if<RotationStep>(&step)) {
            row << "bin " << rot->bin << " rotation: ";
            for (int q = 0; q < n; ++q) {
                if (config.qubits[site_of[q]].bin != rot->bin) continue;
                if (rot->angle == 0.0) continue;
                const std::string lab = rotation_label(rot->axis, rot->angle, plan.theta, plan.phi);
                // X_-t after X_t cancels (same for Y).
                auto& ls = labels[q];
                const std::string inverse =
                    rotation_label(rot->axis, -rot->angle, plan.theta, plan.phi);
                if (!ls.empty() && ls.front() == inverse)
                    ls.erase(ls.begin());
                else
                    ls.insert(ls.begin(), lab);
            }
        } else {
            const auto& sw = std::get<SwapStep>(step);
            row << "swap (" << sw.left_site + 1 << ", " << sw.right_site() + 1 << "): ";
            for (int q = 0; q < n; ++q) {
                if (site_of[q] == sw.left_site)
                    site_of[q] = sw.right_site();
                else if (site_of[q] == sw.right_site())
                    site_of[q] = sw.left_site;
            }
        }
        // Render per site, 1-based logical subscripts.
        std::vector<int> logical_at(n);
        for (int q = 0; q < n; ++q) logical_at[site_of[q]] = q;
        for (int s = 0; s < n; ++s) {
            const int q = logical_at[s];
            std::string body = "I";
            if (!labels[q].empty()) {
                body.clear();
                for (std::size_t i = 0; i < labels[q].size(); ++i) {
                    if (i) body += " ";
                    body += labels[q][i];
                }
            }
            row << "[" << body << "]_" << q + 1;
            if (s + 1 < n) row << " ";
        }
        rows.push_back(row.str());
    }
    return rows;
}

}  // namespace spinaddr
