#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dqd/units.hpp"

namespace dqd {

// Scaled complementary error function exp(z^2) erfc(z) for z >= 0,
// needed because the regularized Coulomb kernel would overflow if the
// two factors were evaluated separately.
inline double erfcx(double z) {
    if (z < 7.5) return std::exp(z * z) * std::erfc(z);
    // asymptotic expansion; terms fall below 1e-17 well before n = 40
    const double inv2z2 = 1.0 / (2.0 * z * z);
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 40; ++n) {
        term *= -(2 * n - 1) * inv2z2;
        sum += term;
        if (std::abs(term) < 1e-17) break;
    }
    return sum * std::numbers::inv_sqrtpi / z;
}

// Device parameters. Geometry defaults are calibrated so that the bare
// interdot barrier peaks at 35 meV and the S(2,0)-T(2,0) splitting at
// far detuning is about 6 meV; the right-well depth offset places the
// singlet-singlet anticrossing at F = F_anticross.
struct PhysicalParams {
    double m_eff = 0.027;       // ratio to free electron mass
    double alpha_rashba = 110.0; // meV nm
    double g_left = 7.8;
    double g_right = 6.8;
    double b_field = 0.05; // T

    double barrier_height = 35.0; // meV, level outside the wells
    double well_center_left = -50.0;
    double well_center_right = 50.0;
    double well_width_left = 60.0;
    double well_width_right = 60.0;
    double well_depth_left = -35.0;  // meV relative to barrier level
    double well_depth_right = -35.0; // calibrated offset applied in config
    double edge_smoothing = 6.0;     // nm, erf edge width of the wells
    double g_smoothing = 10.0;       // nm, width of the g(x) crossover

    double coulomb_length = 10.0; // nm, transverse confinement length
    double epsilon_r = 15.15;

    double F_anticross = 229.0;  // V/cm, detuning reference
    double length_scale = 100.0; // nm, for the eps <-> F conversion

    double kinetic_factor() const { return units::hbar2_over_2m0 / m_eff; }

    double eps_of_F(double F) const {
        return (F - F_anticross) * length_scale * units::meV_per_nm_Vcm;
    }
    double F_of_eps(double eps) const {
        return F_anticross + eps / (length_scale * units::meV_per_nm_Vcm);
    }

    void validate() const {
        if (m_eff <= 0 || coulomb_length <= 0 || epsilon_r <= 0 ||
            length_scale <= 0 || edge_smoothing <= 0)
            throw std::invalid_argument("physical parameters must be positive");
        if (!(well_center_left < well_center_right))
            throw std::invalid_argument("left well must be left of right well");
    }
};

// Smoothed rectangular box, 1 inside [c-w/2, c+w/2], 0 outside.
inline double smooth_box(double x, double center, double width, double s) {
    const double a = (x - (center - 0.5 * width)) / (s * std::numbers::sqrt2);
    const double b = (x - (center + 0.5 * width)) / (s * std::numbers::sqrt2);
    return 0.5 * (std::erf(a) - std::erf(b));
}

// Double-well profile at zero applied field (meV).
inline double bare_potential(const PhysicalParams& p, double x) {
    return p.barrier_height +
           p.well_depth_left *
               smooth_box(x, p.well_center_left, p.well_width_left, p.edge_smoothing) +
           p.well_depth_right *
               smooth_box(x, p.well_center_right, p.well_width_right, p.edge_smoothing);
}

// Full single-particle potential V(x) - e x F (meV), F in V/cm.
inline double potential(const PhysicalParams& p, double x, double F) {
    return bare_potential(p, x) - units::meV_per_nm_Vcm * x * F;
}

// Position-dependent effective g-factor, g_left on the left dot
// crossing over to g_right on the right dot.
inline double g_factor(const PhysicalParams& p, double x) {
    return p.g_right +
           (p.g_left - p.g_right) * 0.5 * std::erfc(x / (p.g_smoothing * std::numbers::sqrt2));
}

// Effective 1D Coulomb repulsion for cylindrical transverse confinement
// of length l: finite at d = 0, bare-Coulomb 1/d for d >> l.
inline double coulomb_1d(double d, double l, double eps_r) {
    if (d < 0 || l <= 0) throw std::invalid_argument("coulomb_1d: bad arguments");
    const double z = d / (l * std::numbers::sqrt2);
    return (units::coulomb_k / eps_r) * std::sqrt(std::numbers::pi / 2.0) / l * erfcx(z);
}

} // namespace dqd
