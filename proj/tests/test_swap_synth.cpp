#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinaddr/rng.hpp"
#include "spinaddr/swap_synth.hpp"

using namespace spinaddr;

namespace {
constexpr double kPi = std::numbers::pi;

Unitary2 tilted(double gamma, double chi) {
    return rotation(Eigen::Vector3d{std::sin(gamma), 0.0, std::cos(gamma)}, chi);
}
}  // namespace

TEST_CASE("effective axis") {
    CHECK(effective_axis({50.0, 0.0, 0.0}) == 0.0);
    CHECK(effective_axis({50.0, 25.0, 0.0}) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    CHECK(effective_axis({1.0, 1e9, 0.0}) == doctest::Approx(kPi / 2.0).epsilon(1e-8));
    CHECK_THROWS_AS(effective_axis({0.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("composite z angles: closed cases") {
    const CompositeZAngles a = composite_z_angles(0.0, kPi / 2.0);
    CHECK(a.phi == 0.0);
    CHECK(a.chi == doctest::Approx(kPi / 4.0).epsilon(1e-13));
    // pure z-axis case composes exactly
    const Unitary2 g = tilted(0.0, a.chi) * rotation(Axis::X, a.phi) * tilted(0.0, a.chi);
    CHECK(max_abs_diff_up_to_phase(g, rotation(Axis::Z, kPi / 2.0)) < 1e-13);

    const CompositeZAngles zero = composite_z_angles(0.9, 0.0);
    CHECK(zero.phi == 0.0);
    CHECK(zero.chi == 0.0);

    const CompositeZAngles b = composite_z_angles(kPi / 4.0, kPi / 2.0);
    CHECK(b.phi_raw == doctest::Approx(-kPi / 2.0).epsilon(1e-12));
    CHECK(b.chi_raw == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-12));
    const Unitary2 gb = tilted(kPi / 4.0, b.chi_raw) * rotation(Axis::X, b.phi_raw) *
                        tilted(kPi / 4.0, b.chi_raw);
    CHECK(max_abs_diff_up_to_phase(gb, rotation(Axis::Z, kPi / 2.0)) < 1e-12);

    // reality violation
    CHECK_THROWS_AS(composite_z_angles(std::atan(2.0), kPi), std::invalid_argument);
}

TEST_CASE("composite identity holds for 500 random valid (gamma, alpha)") {
    CounterRng rng(21);
    int checked = 0;
    for (int i = 0; checked < 500; ++i) {
        const double gamma = (2.0 * rng.uniform(2 * i) - 1.0) * 0.98 * kPi / 2.0;
        const double alpha = (2.0 * rng.uniform(2 * i + 1) - 1.0) * kPi;
        if (std::abs(std::tan(gamma) * std::sin(alpha / 2.0)) > 1.0) continue;
        const CompositeZAngles ang = composite_z_angles(gamma, alpha);
        // sign-adjusted angles change the composition by a global sign only
        const Unitary2 g =
            tilted(gamma, ang.chi) * rotation(Axis::X, ang.phi) * tilted(gamma, ang.chi);
        CHECK(max_abs_diff_up_to_phase(g, rotation(Axis::Z, alpha)) < 1e-10);
        ++checked;
    }
}

TEST_CASE("plan_swap: strong-gradient limit matches pi^2/2J within 2%") {
    const SwapPlan p = plan_swap({50.0, 5000.0, 0.0}, kPi / 2.0);
    CHECK(p.total_duration == doctest::Approx(kPi * kPi / 100.0).epsilon(0.02));
}

TEST_CASE("plan_swap: weak-gradient limit matches (3.5pi + sqrt2)/J within 2%") {
    const SwapPlan p = plan_swap({50.0, 0.005, 0.0}, kPi / 2.0);
    CHECK(p.total_duration ==
          doctest::Approx((3.5 * kPi + std::numbers::sqrt2) / 50.0).epsilon(0.02));
}

TEST_CASE("plan_swap: repetition count at J=50, dEz=85") {
    // oracle: ceil(pi / (4 asin(50/170))) = ceil(2.63) = 3
    const SwapPlan p = plan_swap({50.0, 85.0, 0.0}, kPi / 2.0);
    CHECK(p.n_reps == 3);
    CHECK(p.total_duration == doctest::Approx(0.111).epsilon(0.01));
    CHECK(std::abs(p.alpha_piece) * p.n_reps == doctest::Approx(kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("plan_swap: degenerate and invalid links") {
    const SwapPlan p = plan_swap({50.0, 0.0, 0.0}, kPi / 2.0);
    CHECK(p.phi == 0.0);
    CHECK(p.gamma == 0.0);
    CHECK(p.middle_duration == 0.0);
    CHECK(p.n_reps == 1);
    CHECK_THROWS_AS(plan_swap({0.0, 0.0, 0.0}, kPi / 2.0), std::invalid_argument);
    CHECK_THROWS_AS(plan_swap({50.0, 1.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("plan invariants: physical durations and sign conventions") {
    CounterRng rng(22);
    for (int i = 0; i < 200; ++i) {
        ExchangeLink link;
        link.j_max = 5.0 + 95.0 * rng.uniform(3 * i);
        link.delta_ez = (2.0 * rng.uniform(3 * i + 1) - 1.0) * 300.0;
        const double alpha = (i % 2) ? kPi / 2.0 : kPi;
        const SwapPlan p = plan_swap(link, alpha);
        CHECK(p.outer_duration >= 0.0);
        CHECK(p.middle_duration >= 0.0);
        CHECK(p.chi >= 0.0);
        if (link.delta_ez > 0.0) CHECK(p.phi >= 0.0);
        if (link.delta_ez < 0.0) CHECK(p.phi <= 0.0);
        CHECK(p.n_reps * p.alpha_piece == doctest::Approx(p.alpha_total).epsilon(1e-13));
        // total equals the closed form
        if (p.gamma != 0.0) {
            const double closed = swap_duration_closed_form(p, link);
            CHECK(p.total_duration == doctest::Approx(closed).epsilon(1e-12));
        }
    }
}

TEST_CASE("direct swap duration: nominal formula and oracle scan") {
    const DirectSwapDuration d = direct_swap_duration(50.0);
    CHECK(d.nominal == doctest::Approx(kPi / 100.0).epsilon(1e-13));
    // brute-force scan of the Heisenberg evolution lands on pi/J
    CHECK(d.oracle == doctest::Approx(kPi / 50.0).epsilon(1e-4));

    const DirectSwapDuration h = direct_swap_duration(100.0);
    CHECK(h.nominal == doctest::Approx(d.nominal / 2.0).epsilon(1e-12));
    CHECK(h.oracle == doctest::Approx(d.oracle / 2.0).epsilon(1e-3));
}

TEST_CASE("alpha calibration lands on pi") {
    const double a = calibrated_alpha_total();
    CHECK(a == doctest::Approx(kPi).epsilon(1e-7));
}
