#include <catch2/catch_amalgamated.hpp>

#include "dqd/potential.hpp"

using namespace dqd;

TEST_CASE("erfcx matches direct evaluation and is smooth at the branch") {
    for (double z : {0.0, 0.3, 1.0, 3.0, 7.49, 7.51, 10.0, 25.0}) {
        if (z < 26.0 && z > 0.0) {
            // reference via long double direct product where representable
            const long double ref =
                expl(static_cast<long double>(z) * z) * erfcl(static_cast<long double>(z));
            REQUIRE_THAT(erfcx(z), Catch::Matchers::WithinRel(static_cast<double>(ref), 1e-12));
        }
    }
    REQUIRE(erfcx(0.0) == 1.0);
}

TEST_CASE("effective 1D Coulomb kernel") {
    const double l = 10.0, eps_r = 15.15;
    const double k = units::coulomb_k / eps_r;

    SECTION("finite value at contact equals the analytic limit") {
        const double expect = std::sqrt(std::numbers::pi / 2.0) * k / l;
        REQUIRE_THAT(coulomb_1d(0.0, l, eps_r), Catch::Matchers::WithinRel(expect, 1e-12));
    }
    SECTION("bare Coulomb asymptote within 1% at d = 20 l") {
        const double d = 20.0 * l;
        REQUIRE_THAT(coulomb_1d(d, l, eps_r), Catch::Matchers::WithinRel(k / d, 0.01));
    }
    SECTION("strictly decreasing") {
        double prev = coulomb_1d(0.0, l, eps_r);
        for (double d = 0.5; d < 400.0; d += 0.5) {
            const double v = coulomb_1d(d, l, eps_r);
            REQUIRE(v < prev);
            REQUIRE(v > 0.0);
            prev = v;
        }
    }
}

TEST_CASE("double-well potential profile") {
    PhysicalParams p;

    SECTION("barrier peak equals barrier_height at zero field") {
        double peak = -1e30;
        for (double x = p.well_center_left; x <= p.well_center_right; x += 0.05)
            peak = std::max(peak, potential(p, x, 0.0));
        REQUIRE_THAT(peak, Catch::Matchers::WithinAbs(p.barrier_height, 0.1));
    }
    SECTION("zero field leaves the bare double well") {
        for (double x : {-80.0, -50.0, 0.0, 42.0, 120.0})
            REQUIRE(potential(p, x, 0.0) == bare_potential(p, x));
    }
    SECTION("tilt term: 100 V/cm over 100 nm shifts by 1 meV") {
        const double F = 100.0;
        for (double x : {-70.0, -10.0, 35.0}) {
            const double tilt_diff = (potential(p, x + 100.0, F) - potential(p, x, F)) -
                                     (potential(p, x + 100.0, 0.0) - potential(p, x, 0.0));
            REQUIRE_THAT(tilt_diff, Catch::Matchers::WithinAbs(-1.0, 1e-12));
        }
    }
    SECTION("eps <-> F conversion") {
        REQUIRE_THAT(p.eps_of_F(229.0), Catch::Matchers::WithinAbs(0.0, 1e-15));
        REQUIRE_THAT(p.eps_of_F(220.0), Catch::Matchers::WithinAbs(-0.09, 1e-12));
        REQUIRE_THAT(p.F_of_eps(-0.04), Catch::Matchers::WithinAbs(225.0, 1e-12));
    }
}

TEST_CASE("position-dependent g-factor crosses over between the dots") {
    PhysicalParams p;
    REQUIRE_THAT(g_factor(p, -120.0), Catch::Matchers::WithinAbs(p.g_left, 1e-9));
    REQUIRE_THAT(g_factor(p, 120.0), Catch::Matchers::WithinAbs(p.g_right, 1e-9));
    REQUIRE_THAT(g_factor(p, 0.0), Catch::Matchers::WithinAbs(0.5 * (p.g_left + p.g_right), 1e-9));
}
