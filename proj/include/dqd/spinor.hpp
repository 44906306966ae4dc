#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "dqd/fft.hpp"
#include "dqd/grid.hpp"

namespace dqd {

using cplx = std::complex<double>;

// Two-electron spinor on the (x1, x2) grid in the spin basis
// {up-up, up-down, down-up, down-down}. Fermionic antisymmetry fixes
// the down-up component to -c_ud(x2, x1), so only three component
// fields are stored; c_uu and c_dd are antisymmetric under x1 <-> x2.
struct SpinorState {
    GridSpec grid;
    cvec c_uu, c_ud, c_dd;

    SpinorState() = default;
    explicit SpinorState(const GridSpec& g)
        : grid(g), c_uu(g.size2d()), c_ud(g.size2d()), c_dd(g.size2d()) {}

    std::array<cvec*, 3> comps() { return {&c_uu, &c_ud, &c_dd}; }
    std::array<const cvec*, 3> comps() const { return {&c_uu, &c_ud, &c_dd}; }

    // down-up component reconstructed from the exchange constraint
    cplx c_du(int i1, int i2) const { return -c_ud[grid.idx(i2, i1)]; }
};

// <a|b> with the grid measure; the up-down term counts twice because it
// carries the derived down-up component along.
inline cplx inner(const SpinorState& a, const SpinorState& b) {
    if (a.grid != b.grid) throw std::invalid_argument("spinor grid mismatch");
    cplx s_uu = 0, s_ud = 0, s_dd = 0;
    const std::size_t m = a.grid.size2d();
    for (std::size_t i = 0; i < m; ++i) s_uu += std::conj(a.c_uu[i]) * b.c_uu[i];
    for (std::size_t i = 0; i < m; ++i) s_ud += std::conj(a.c_ud[i]) * b.c_ud[i];
    for (std::size_t i = 0; i < m; ++i) s_dd += std::conj(a.c_dd[i]) * b.c_dd[i];
    const double w = a.grid.dx() * a.grid.dx();
    return w * (s_uu + 2.0 * s_ud + s_dd);
}

inline double norm(const SpinorState& a) { return std::sqrt(std::real(inner(a, a))); }

inline void scale(SpinorState& a, cplx factor) {
    for (auto* c : a.comps())
        for (auto& v : *c) v *= factor;
}

inline void normalize(SpinorState& a) {
    const double n = norm(a);
    if (n == 0.0) throw std::runtime_error("cannot normalize zero state");
    scale(a, 1.0 / n);
}

// a += f * b
inline void axpy(SpinorState& a, cplx f, const SpinorState& b) {
    for (int c = 0; c < 3; ++c) {
        auto& av = *a.comps()[c];
        const auto& bv = *b.comps()[c];
        for (std::size_t i = 0; i < av.size(); ++i) av[i] += f * bv[i];
    }
}

// Project the spatially symmetric parts out of c_uu and c_dd; the mixed
// component already satisfies the exchange constraint by construction.
inline void antisymmetrize(SpinorState& a) {
    const int n = a.grid.n_points;
    for (cvec* cp : {&a.c_uu, &a.c_dd}) {
        cvec& c = *cp;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                const cplx u = c[a.grid.idx(i, j)];
                const cplx v = c[a.grid.idx(j, i)];
                const cplx h = 0.5 * (u - v);
                c[a.grid.idx(i, j)] = h;
                c[a.grid.idx(j, i)] = -h;
            }
        for (int i = 0; i < n; ++i) c[a.grid.idx(i, i)] = 0.0;
    }
}

// Weight of the spin-singlet channel: the symmetric combination of the
// mixed-spin component, which is 1 for any pure singlet state.
inline double singlet_character(const SpinorState& a) {
    const int n = a.grid.n_points;
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx sym =
                (a.c_ud[a.grid.idx(i, j)] + a.c_ud[a.grid.idx(j, i)]) / std::numbers::sqrt2;
            s += std::norm(sym);
        }
    return s * a.grid.dx() * a.grid.dx();
}

enum class Side { left, right };

// Probability of finding particle 1 on the given half axis, summed over
// spins; equals the same probability for particle 2 by antisymmetry.
inline double side_occupation(const SpinorState& a, Side side) {
    const int n = a.grid.n_points;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = left_weight(a.grid, i);
        const double wl = (side == Side::left) ? w : 1.0 - w;
        if (wl == 0.0) continue;
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const std::size_t id = a.grid.idx(i, j);
            row += std::norm(a.c_uu[id]) + std::norm(a.c_ud[id]) + std::norm(a.c_dd[id]);
        }
        // derived down-up component: |c_du(i,j)|^2 = |c_ud(j,i)|^2
        for (int j = 0; j < n; ++j) row += std::norm(a.c_ud[a.grid.idx(j, i)]);
        s += wl * row;
    }
    return s * a.grid.dx() * a.grid.dx();
}

// <a| x1 + x2 |b> (nm), diagonal in position and exchange symmetric.
inline cplx moment_x1_plus_x2(const SpinorState& a, const SpinorState& b) {
    if (a.grid != b.grid) throw std::invalid_argument("spinor grid mismatch");
    const int n = a.grid.n_points;
    cplx s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double xs = a.grid.x(i) + a.grid.x(j);
            const std::size_t id = a.grid.idx(i, j);
            s += xs * (std::conj(a.c_uu[id]) * b.c_uu[id] +
                       2.0 * std::conj(a.c_ud[id]) * b.c_ud[id] +
                       std::conj(a.c_dd[id]) * b.c_dd[id]);
        }
    return s * a.grid.dx() * a.grid.dx();
}

} // namespace dqd
