#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "dqd/fft.hpp"
#include "dqd/grid.hpp"
#include "dqd/potential.hpp"
#include "dqd/spinor.hpp"
#include "dqd/units.hpp"

namespace dqd {

// Grid-sampled pieces of the two-electron Hamiltonian at a fixed field:
// diagonal potential + Coulomb, Zeeman amplitudes per coordinate, and
// the momentum-space kinetic/Rashba factors.
class HamiltonianOps {
  public:
    HamiltonianOps(const PhysicalParams& p, const GridSpec& g, double F)
        : params_(p), grid_(g), field_(F) {
        const int n = g.n_points;
        vpot_.resize(g.size2d());
        zeeman_.resize(n);
        kvals_.resize(n);
        std::vector<double> v1(n);
        for (int i = 0; i < n; ++i) {
            v1[i] = potential(p, g.x(i), F);
            zeeman_[i] = 0.5 * g_factor(p, g.x(i)) * units::mu_bohr * p.b_field;
            kvals_[i] = g.k(i);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double d = std::abs(g.x(i) - g.x(j));
                vpot_[g.idx(i, j)] =
                    v1[i] + v1[j] + coulomb_1d(d, p.coulomb_length, p.epsilon_r);
            }
        kappa_ = p.kinetic_factor();
        alpha_ = p.alpha_rashba;
    }

    const GridSpec& grid() const { return grid_; }
    const PhysicalParams& params() const { return params_; }
    double field() const { return field_; }

    // out = H in. Scratch must hold one component (grid.size2d()).
    void apply(const SpinorState& in, SpinorState& out, const Fft2& fft,
               cvec& scratch) const {
        const int n = grid_.n_points;
        // position-diagonal part: potential + Coulomb + Zeeman
        for (int i = 0; i < n; ++i) {
            const double a1 = zeeman_[i];
            for (int j = 0; j < n; ++j) {
                const std::size_t id = grid_.idx(i, j);
                const double vt = vpot_[id];
                const double a2 = zeeman_[j];
                const cplx v0 = in.c_uu[id], v1 = in.c_ud[id], v3 = in.c_dd[id];
                const cplx v2 = -in.c_ud[grid_.idx(j, i)];
                out.c_uu[id] = vt * v0 + a1 * v2 + a2 * v1;
                out.c_ud[id] = vt * v1 + a1 * v3 + a2 * v0;
                out.c_dd[id] = vt * v3 + a1 * v1 + a2 * v2;
            }
        }
        // kinetic + Rashba in momentum space
        work_.resize(3);
        for (int c = 0; c < 3; ++c) {
            work_[c] = *in.comps()[c];
            fft.forward(work_[c].data());
        }
        scratch = work_[1]; // pristine mixed-spin spectrum for swapped reads
        const cplx im(0.0, 1.0);
        for (int i = 0; i < n; ++i) {
            const double k1 = kvals_[i];
            for (int j = 0; j < n; ++j) {
                const double k2 = kvals_[j];
                const std::size_t id = grid_.idx(i, j);
                const double kin = kappa_ * (k1 * k1 + k2 * k2);
                const cplx w0 = work_[0][id], w1 = scratch[id], w3 = work_[2][id];
                const cplx w2 = -scratch[grid_.idx(j, i)];
                work_[0][id] = kin * w0 + (-alpha_ * k1) * (-im * w2) +
                               (-alpha_ * k2) * (-im * w1);
                work_[1][id] = kin * w1 + (-alpha_ * k1) * (-im * w3) +
                               (-alpha_ * k2) * (im * w0);
                work_[2][id] = kin * w3 + (-alpha_ * k1) * (im * w1) +
                               (-alpha_ * k2) * (im * w2);
            }
        }
        for (int c = 0; c < 3; ++c) {
            fft.inverse(work_[c].data());
            auto& o = *out.comps()[c];
            for (std::size_t i = 0; i < o.size(); ++i) o[i] += work_[c][i];
        }
    }

    double energy(const SpinorState& s, const Fft2& fft, cvec& scratch) const {
        SpinorState hs(grid_);
        apply(s, hs, fft, scratch);
        return std::real(inner(s, hs));
    }

    const std::vector<double>& diagonal_potential() const { return vpot_; }
    const std::vector<double>& zeeman_amplitude() const { return zeeman_; }

  private:
    PhysicalParams params_;
    GridSpec grid_;
    double field_;
    std::vector<double> vpot_;   // V(x1)+V(x2)+Vc, size n^2
    std::vector<double> zeeman_; // (1/2) g(x) mu_B B, size n
    std::vector<double> kvals_;  // FFT wavenumbers, size n
    double kappa_;               // hbar^2 / (2 m*)
    double alpha_;
    mutable std::vector<cvec> work_;
};

// Precomputed pointwise factors for one imaginary-time step size.
// Strang splitting: half potential step, full kinetic step, half
// potential step; each factor is an exact 4x4 exponential that
// factorizes over the two spins.
struct StepTables {
    double tau = 0.0; // ns
    std::vector<double> expv;         // exp(-tau/2 * V / hbar), size n^2
    std::vector<double> chx, shx;     // cosh/sinh(tau/2 * zeeman / hbar), size n
    std::vector<double> expk;         // exp(-tau * kappa k^2 / hbar), size n (per axis)
    std::vector<double> chk, shk;     // cosh/sinh(tau * alpha k / hbar), size n

    StepTables(const HamiltonianOps& h, double tau_ns) : tau(tau_ns) {
        const auto& g = h.grid();
        const int n = g.n_points;
        const auto& vpot = h.diagonal_potential();
        const auto& zee = h.zeeman_amplitude();
        const double half = 0.5 * tau / units::hbar;
        expv.resize(g.size2d());
        for (std::size_t i = 0; i < expv.size(); ++i) expv[i] = std::exp(-half * vpot[i]);
        chx.resize(n);
        shx.resize(n);
        for (int i = 0; i < n; ++i) {
            const double th = half * zee[i];
            chx[i] = std::cosh(th);
            shx[i] = std::sinh(th);
        }
        const double kappa = h.params().kinetic_factor();
        const double alpha = h.params().alpha_rashba;
        expk.resize(n);
        chk.resize(n);
        shk.resize(n);
        for (int i = 0; i < n; ++i) {
            const double k = g.k(i);
            expk[i] = std::exp(-tau / units::hbar * kappa * k * k);
            const double th = tau / units::hbar * alpha * k;
            chk[i] = std::cosh(th);
            shk[i] = std::sinh(th);
        }
    }
};

// exp(-(tau/2)(V + Zeeman)/hbar) applied in place.
inline void step_position(SpinorState& s, const StepTables& t, cvec& scratch) {
    const GridSpec& g = s.grid;
    const int n = g.n_points;
    scratch = s.c_ud;
    for (int i = 0; i < n; ++i) {
        const double ch1 = t.chx[i], sh1 = t.shx[i];
        for (int j = 0; j < n; ++j) {
            const std::size_t id = g.idx(i, j);
            const cplx v0 = s.c_uu[id], v1 = scratch[id], v3 = s.c_dd[id];
            const cplx v2 = -scratch[g.idx(j, i)];
            // particle 1: exp(-th1 sigma_x) on (v0,v2) and (v1,v3)
            const cplx a0 = ch1 * v0 - sh1 * v2;
            const cplx a2 = ch1 * v2 - sh1 * v0;
            const cplx a1 = ch1 * v1 - sh1 * v3;
            const cplx a3 = ch1 * v3 - sh1 * v1;
            // particle 2: exp(-th2 sigma_x) on (a0,a1) and (a2,a3)
            const double ch2 = t.chx[j], sh2 = t.shx[j];
            const double ev = t.expv[id];
            s.c_uu[id] = ev * (ch2 * a0 - sh2 * a1);
            s.c_ud[id] = ev * (ch2 * a1 - sh2 * a0);
            s.c_dd[id] = ev * (ch2 * a3 - sh2 * a2);
        }
    }
}

// exp(-tau (T + Rashba)/hbar) applied in place via the spectral grid.
inline void step_momentum(SpinorState& s, const StepTables& t, const Fft2& fft,
                          cvec& scratch) {
    const GridSpec& g = s.grid;
    const int n = g.n_points;
    for (auto* c : s.comps()) fft.forward(c->data());
    scratch = s.c_ud;
    const cplx im(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const double ch1 = t.chk[i], sh1 = t.shk[i], e1 = t.expk[i];
        for (int j = 0; j < n; ++j) {
            const std::size_t id = g.idx(i, j);
            const cplx v0 = s.c_uu[id], v1 = scratch[id], v3 = s.c_dd[id];
            const cplx v2 = -scratch[g.idx(j, i)];
            // particle 1: exp(+th1 sigma_y) on (v0,v2) and (v1,v3)
            const cplx a0 = ch1 * v0 - im * (sh1 * v2);
            const cplx a2 = ch1 * v2 + im * (sh1 * v0);
            const cplx a1 = ch1 * v1 - im * (sh1 * v3);
            const cplx a3 = ch1 * v3 + im * (sh1 * v1);
            // particle 2: exp(+th2 sigma_y) on (a0,a1) and (a2,a3)
            const double ch2 = t.chk[j], sh2 = t.shk[j];
            const double e = e1 * t.expk[j];
            s.c_uu[id] = e * (ch2 * a0 - im * (sh2 * a1));
            s.c_ud[id] = e * (ch2 * a1 + im * (sh2 * a0));
            s.c_dd[id] = e * (ch2 * a3 + im * (sh2 * a2));
        }
    }
    for (auto* c : s.comps()) fft.inverse(c->data());
}

} // namespace dqd
