#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinaddr/fidelity.hpp"
#include "spinaddr/oracle.hpp"
#include "spinaddr/rng.hpp"

using namespace spinaddr;

namespace {
constexpr double kPi = std::numbers::pi;

SpectrumParams standard_params() {
    SpectrumParams p;
    p.sigma = 60.0;
    p.delta = 10.0;
    p.tunability = 5.0;
    return p;
}

void override_drive_strength(SequencePlan& plan, double rabi) {
    for (auto& step : plan.steps) {
        if (auto* rot = std::get_if<RotationStep>(&step)) {
            rot->drive.rabi = rabi;
            rot->drive.duration = std::abs(rot->angle) / rabi;
        }
    }
}

}  // namespace

TEST_CASE("u(1) and su(2) parts of the pair Hamiltonian commute and factor") {
    const Unitary2 x = pauli(Axis::X), y = pauli(Axis::Y), z = pauli(Axis::Z);
    const Unitary2 id = Unitary2::Identity();
    const double J = 50.0, dEz = 85.0, Ez = 37.0, t = 0.0123;

    const Unitary4 h_u1 = (J / 4.0) * kron(z, z) + Ez * (kron(id, z) + kron(z, id));
    const Unitary4 h_su2 =
        (J / 4.0) * (kron(x, x) + kron(y, y)) + (dEz / 2.0) * (kron(id, z) - kron(z, id));
    CHECK((pair_hamiltonian(J, dEz, Ez) - (h_u1 + h_su2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h_u1 * h_su2 - h_su2 * h_u1).cwiseAbs().maxCoeff() < 1e-12);

    const Unitary4 full = evolve_hermitian(pair_hamiltonian(J, dEz, Ez), t);
    const Unitary4 split = evolve_hermitian(h_u1, t) * evolve_hermitian(h_su2, t);
    CHECK((full - split).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("verify_swap_plan: gradient-free link is exactly SWAP-equivalent") {
    const ExchangeLink link{50.0, 0.0, 0.0};
    const SwapPlan plan = plan_swap(link, calibrated_alpha_total());
    CHECK(verify_swap_plan(plan, link).fidelity == doctest::Approx(1.0).epsilon(1e-12));

    // mean-Zeeman phases are pure local z and must be absorbed
    const ExchangeLink with_ez{50.0, 0.0, 2000.0};
    const SwapPlan plan_ez = plan_swap(with_ez, calibrated_alpha_total());
    CHECK(verify_swap_plan(plan_ez, with_ez).fidelity == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("verify_swap_plan: halved rotation angle is a clear negative control") {
    const ExchangeLink link{50.0, 0.0, 0.0};
    const SwapPlan plan = plan_swap(link, calibrated_alpha_total() / 2.0);
    CHECK(verify_swap_plan(plan, link).fidelity < 0.999);
}

TEST_CASE("exact-sync drives leave both qubits exactly clean (two-qubit array)") {
    const ArrayConfig cfg = config_from_bins(standard_params(), {0, 1});
    SequencePlan plan = plan_sequence(cfg, 0, kPi / 2.0, kPi / 2.0, 4);
    override_drive_strength(plan, exact_sync_strength(1, 10.0, kPi / 2.0, 4));

    const ExactSequenceResult r = simulate_sequence_exact(plan, cfg, SwapMode::ideal);
    CHECK(r.site_fidelity[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.site_fidelity[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-10));
    // spectator net is diagonal outright
    CHECK(std::abs(r.net[1](0, 1)) < 1e-12);
    CHECK(std::abs(r.net[1](1, 0)) < 1e-12);
}

TEST_CASE("target picks up exactly the intended rotation under ideal swaps") {
    const ArrayConfig cfg = table1_fixture();
    const SequencePlan plan = plan_sequence(cfg, 0, kPi / 2.0, kPi / 2.0, 4);
    const ExactSequenceResult r = simulate_sequence_exact(plan, cfg, SwapMode::ideal);
    // the target is resonant at every step, so its net rotation is exact
    CHECK(max_abs_diff_up_to_phase(r.net[0], sequence_target_unitary(kPi / 2.0, kPi / 2.0)) <
          1e-12);
    CHECK(r.site_fidelity[0] == doctest::Approx(1.0).epsilon(1e-12));
    // spectators are close to identity at the standard drive
    for (int q = 1; q < 6; ++q) CHECK(r.site_fidelity[q] > 0.995);
}

TEST_CASE("exact sequence fidelity never falls below the printed bound term") {
    const SpectrumParams p = standard_params();
    const DriveParams drive = make_step_drive(10.0, kPi / 2.0, 4, Axis::X, 0);
    int checked = 0;
    double min_diff = 1.0, max_abs_diff = 0.0;
    for (std::uint64_t seed = 0; checked < 100; ++seed) {
        const ArrayConfig cfg = sample_config(p, 6, CounterRng::substream(404, seed));
        SequencePlan plan;
        try {
            plan = plan_sequence(cfg, 0, kPi / 2.0, kPi / 2.0, 4);
        } catch (const std::runtime_error&) {
            continue;
        }
        const BinOccupancy occ = occupancy(cfg);
        const double ft =
            local_rotation_fidelity(occ, cfg.qubits[plan.target_site].bin, drive, p.delta);
        const double fk =
            local_rotation_fidelity(occ, cfg.qubits[plan.partner_site].bin, drive, p.delta);
        const double bound = ft * ft * fk * fk;
        const ExactSequenceResult r = simulate_sequence_exact(plan, cfg, SwapMode::ideal);
        const double diff = r.fidelity - bound;
        min_diff = std::min(min_diff, diff);
        max_abs_diff = std::max(max_abs_diff, std::abs(diff));
        ++checked;
    }
    CHECK(min_diff >= -1e-6);
    // agreement scale: both are within a few parts in 1e3 of each other
    CHECK(max_abs_diff < 1e-2);
}

TEST_CASE("swap-mode consistency: synthesized swaps charge at most their own infidelity") {
    const ArrayConfig cfg = table1_fixture();
    const ExchangeLink link{50.0, 85.0, 0.0};
    const double alpha = calibrated_alpha_total();
    const SequencePlan plan = plan_sequence(cfg, 0, kPi / 2.0, kPi / 2.0, 4, link, alpha);

    const double f_ideal = simulate_sequence_exact(plan, cfg, SwapMode::ideal).fidelity;
    const double f_synth = simulate_sequence_exact(plan, cfg, SwapMode::synthesized).fidelity;
    const double fv = verify_swap_plan(plan_swap(link, alpha), link).fidelity;
    CHECK(f_ideal - f_synth <= 1.0 - fv * fv * fv * fv + 1e-9);
    CHECK(f_synth <= f_ideal + 1e-12);
}

TEST_CASE("synthesized mode requires swap plans") {
    const ArrayConfig cfg = table1_fixture();
    const SequencePlan plan = plan_sequence(cfg, 0, kPi / 2.0, kPi / 2.0, 4);
    CHECK_THROWS_AS(simulate_sequence_exact(plan, cfg, SwapMode::synthesized),
                    std::invalid_argument);
}
