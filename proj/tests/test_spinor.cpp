#include <catch2/catch_amalgamated.hpp>

#include "dqd/solver.hpp"
#include "dqd/spinor.hpp"

using namespace dqd;

namespace {
GridSpec small_grid() { return GridSpec{-120.0, 120.0, 64}; }
} // namespace

TEST_CASE("seed states are normalized and exchange antisymmetric") {
    const GridSpec g = small_grid();
    PhysicalParams p;
    auto seeds = detail::default_seeds(p, g, 6);
    REQUIRE(seeds.size() == 6);
    for (auto& s : seeds) {
        REQUIRE_THAT(norm(s), Catch::Matchers::WithinAbs(1.0, 1e-10));
        // exchange map: swap coordinates and spins; expect -state
        for (int i = 0; i < g.n_points; i += 7)
            for (int j = 0; j < g.n_points; j += 5) {
                const auto id = g.idx(i, j);
                const auto sw = g.idx(j, i);
                REQUIRE_THAT(std::abs(s.c_uu[id] + s.c_uu[sw]),
                             Catch::Matchers::WithinAbs(0.0, 1e-8));
                REQUIRE_THAT(std::abs(s.c_dd[id] + s.c_dd[sw]),
                             Catch::Matchers::WithinAbs(0.0, 1e-8));
            }
    }
}

TEST_CASE("singlet character distinguishes spin channels") {
    const GridSpec g = small_grid();
    PhysicalParams p;
    auto l0 = [&](double x) { return detail::well_orbital(x, p.well_center_left, 60.0, 0); };
    auto r0 = [&](double x) { return detail::well_orbital(x, p.well_center_right, 60.0, 0); };

    auto s11 = detail::seed_state(g, l0, r0, detail::SpinPattern::singlet);
    auto s20 = detail::seed_state(g, l0, l0, detail::SpinPattern::singlet);
    auto t0 = detail::seed_state(g, l0, r0, detail::SpinPattern::triplet0);
    auto tp = detail::seed_state(g, l0, r0, detail::SpinPattern::triplet_plus);

    REQUIRE_THAT(singlet_character(s11), Catch::Matchers::WithinAbs(1.0, 1e-10));
    REQUIRE_THAT(singlet_character(s20), Catch::Matchers::WithinAbs(1.0, 1e-10));
    REQUIRE_THAT(singlet_character(t0), Catch::Matchers::WithinAbs(0.0, 1e-10));
    REQUIRE_THAT(singlet_character(tp), Catch::Matchers::WithinAbs(0.0, 1e-10));

    SECTION("equal superposition has character one half") {
        SpinorState mix(g);
        axpy(mix, 1.0 / std::numbers::sqrt2, s11);
        axpy(mix, 1.0 / std::numbers::sqrt2, t0);
        REQUIRE_THAT(norm(mix), Catch::Matchers::WithinAbs(1.0, 1e-9));
        REQUIRE_THAT(singlet_character(mix), Catch::Matchers::WithinAbs(0.5, 1e-10));
    }
}

TEST_CASE("side occupations partition to one") {
    const GridSpec g = small_grid();
    PhysicalParams p;
    for (auto& s : detail::default_seeds(p, g, 5)) {
        const double l = side_occupation(s, Side::left);
        const double r = side_occupation(s, Side::right);
        REQUIRE_THAT(l + r, Catch::Matchers::WithinAbs(1.0, 1e-10));
    }
    auto l0 = [&](double x) { return detail::well_orbital(x, p.well_center_left, 60.0, 0); };
    auto r0 = [&](double x) { return detail::well_orbital(x, p.well_center_right, 60.0, 0); };
    auto s20 = detail::seed_state(g, l0, l0, detail::SpinPattern::singlet);
    auto s11 = detail::seed_state(g, l0, r0, detail::SpinPattern::singlet);
    REQUIRE(side_occupation(s20, Side::left) > 0.99);
    REQUIRE_THAT(side_occupation(s11, Side::left), Catch::Matchers::WithinAbs(0.5, 1e-6));
}

TEST_CASE("dipole moment of a left-dot pair sits at twice the well center") {
    const GridSpec g = small_grid();
    PhysicalParams p;
    auto l0 = [&](double x) { return detail::well_orbital(x, p.well_center_left, 60.0, 0); };
    auto s20 = detail::seed_state(g, l0, l0, detail::SpinPattern::singlet);
    const double m = std::real(moment_x1_plus_x2(s20, s20));
    REQUIRE_THAT(m, Catch::Matchers::WithinAbs(2.0 * p.well_center_left, 0.5));
}
