#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dqd/hamiltonian.hpp"

namespace dqd {

// One solved eigenbasis at a fixed detuning field.
struct EigenBasis {
    double field_F = 0.0;
    double detuning_eps = 0.0;
    std::vector<SpinorState> states;
    std::vector<double> energies;  // meV, ascending
    std::vector<double> singlet_char;
    std::vector<double> occ_left;
    std::vector<double> occ_right;
    std::vector<double> residuals; // ||H psi - E psi|| per state, meV

    int n_states() const { return static_cast<int>(states.size()); }
};

struct SolveOptions {
    int n_states = 5;
    double tol_energy = 1e-7;   // meV, max energy drift between checks
    double tol_residual = 1e-4; // meV, ||H psi - E psi||
    int max_iterations = 20000;
    int check_interval = 12;    // Rayleigh-Ritz / convergence cadence
    // imaginary-time step schedule, ns (1e-6 ns = 1e-3 ps)
    std::vector<double> dtau_stages = {8e-6, 2e-6};
    double degeneracy_tol = 1e-6;   // meV, tie-break window
    double precond_shift = 5.0;     // meV, kinetic preconditioner offset
    int max_refine_rounds = 40;     // residual-refinement cap
    bool track_energies = false;    // record <H> after every iteration
};

namespace detail {

inline void gram_schmidt(std::vector<SpinorState>& states) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const cplx ov = inner(states[j], states[i]);
            axpy(states[i], -ov, states[j]);
        }
        normalize(states[i]);
    }
}

// Kinetic-energy preconditioner (T + shift)^-1 applied in place; used to
// turn Rayleigh-Ritz residuals into effective correction directions.
inline void precondition_residual(SpinorState& r, const PhysicalParams& p, const Fft2& fft,
                                  double shift) {
    const GridSpec& g = r.grid;
    const double kappa = p.kinetic_factor();
    for (auto* c : r.comps()) {
        fft.forward(c->data());
        for (int i = 0; i < g.n_points; ++i) {
            const double k1 = g.k(i);
            for (int j = 0; j < g.n_points; ++j) {
                const double k2 = g.k(j);
                (*c)[g.idx(i, j)] /= kappa * (k1 * k1 + k2 * k2) + shift;
            }
        }
        fft.inverse(c->data());
    }
}

// Gaussian single-well orbital; order 1 carries one node.
inline double well_orbital(double x, double center, double width, int order) {
    const double sig = width / 4.0;
    const double u = (x - center) / sig;
    const double g = std::exp(-0.5 * u * u);
    return order == 0 ? g : u * g;
}

enum class SpinPattern { singlet, triplet0, triplet_plus, triplet_minus };

// Antisymmetrized product of two orbitals with a definite two-spin
// pattern (triplet +/- along the field axis x).
inline SpinorState seed_state(const GridSpec& g, const std::function<double(double)>& fa,
                              const std::function<double(double)>& fb, SpinPattern sp) {
    SpinorState s(g);
    const int n = g.n_points;
    std::vector<double> va(n), vb(n);
    for (int i = 0; i < n; ++i) {
        va[i] = fa(g.x(i));
        vb[i] = fb(g.x(i));
    }
    const bool symmetric = (sp == SpinPattern::singlet);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double prod = symmetric
                                    ? va[i] * vb[j] + vb[i] * va[j]
                                    : va[i] * vb[j] - vb[i] * va[j];
            const std::size_t id = g.idx(i, j);
            switch (sp) {
            case SpinPattern::singlet:
                s.c_ud[id] = prod / std::numbers::sqrt2;
                break;
            case SpinPattern::triplet0:
                s.c_ud[id] = prod / std::numbers::sqrt2;
                break;
            case SpinPattern::triplet_plus:
                s.c_uu[id] = 0.5 * prod;
                s.c_ud[id] = 0.5 * prod;
                s.c_dd[id] = 0.5 * prod;
                break;
            case SpinPattern::triplet_minus:
                s.c_uu[id] = 0.5 * prod;
                s.c_ud[id] = -0.5 * prod;
                s.c_dd[id] = 0.5 * prod;
                break;
            }
        }
    antisymmetrize(s);
    normalize(s);
    return s;
}

inline std::vector<SpinorState> default_seeds(const PhysicalParams& p, const GridSpec& g,
                                              int n_states) {
    auto l0 = [&](double x) { return well_orbital(x, p.well_center_left, p.well_width_left, 0); };
    auto l1 = [&](double x) { return well_orbital(x, p.well_center_left, p.well_width_left, 1); };
    auto r0 = [&](double x) { return well_orbital(x, p.well_center_right, p.well_width_right, 0); };
    std::vector<SpinorState> seeds;
    seeds.push_back(seed_state(g, l0, l0, SpinPattern::singlet));       // S(2,0)
    seeds.push_back(seed_state(g, l0, r0, SpinPattern::singlet));       // S(1,1)
    seeds.push_back(seed_state(g, l0, r0, SpinPattern::triplet0));      // T0(1,1)
    seeds.push_back(seed_state(g, l0, r0, SpinPattern::triplet_plus));  // T+(1,1)
    seeds.push_back(seed_state(g, l0, r0, SpinPattern::triplet_minus)); // T-(1,1)
    if (n_states >= 6)
        seeds.push_back(seed_state(g, l0, l1, SpinPattern::triplet_minus)); // T(2,0)
    while (static_cast<int>(seeds.size()) > n_states) seeds.pop_back();
    gram_schmidt(seeds);
    return seeds;
}

} // namespace detail

struct SolveDiagnostics {
    int iterations = 0;
    std::vector<std::vector<double>> energy_history; // per state, if tracked
};

// Lowest eigenstates by imaginary-time split-operator evolution with
// modified Gram-Schmidt orthogonalization; a Rayleigh-Ritz rotation at
// every check resolves the near-degenerate multiplets.
inline EigenBasis solve_lowest(const PhysicalParams& params, const GridSpec& grid,
                               double F, const SolveOptions& opts, const Fft2& fft,
                               const std::vector<SpinorState>* seed_states = nullptr,
                               SolveDiagnostics* diag = nullptr) {
    grid.validate();
    params.validate();
    if (opts.n_states < 1 || opts.n_states > 6)
        throw std::invalid_argument("solve_lowest supports 1..6 states");

    HamiltonianOps ham(params, grid, F);
    std::vector<SpinorState> psi =
        seed_states ? *seed_states : detail::default_seeds(params, grid, opts.n_states);
    if (static_cast<int>(psi.size()) != opts.n_states)
        throw std::invalid_argument("seed count does not match n_states");
    for (auto& s : psi) {
        if (s.grid != grid) throw std::invalid_argument("seed grid mismatch");
        antisymmetrize(s);
    }
    detail::gram_schmidt(psi);

    const int ns = opts.n_states;
    cvec scratch(grid.size2d());
    Eigen::VectorXd last_energies = Eigen::VectorXd::Constant(ns, 1e30);
    std::vector<double> residuals(ns, 1e30);
    Eigen::VectorXd energies(ns);

    if (diag && opts.track_energies) diag->energy_history.assign(ns, {});

    // Rayleigh-Ritz over the current states, optionally augmented by
    // preconditioned residuals plus the previous correction directions
    // (LOBPCG-style three-term basis). Updates psi, energies and
    // residuals; Ritz values never increase (Cauchy interlacing).
    std::vector<SpinorState> prev_dirs;
    auto ritz_update = [&](bool augment) {
        std::vector<SpinorState> basis = psi;
        std::vector<SpinorState> hbasis;
        hbasis.reserve(3 * ns);
        for (int j = 0; j < ns; ++j) {
            hbasis.emplace_back(grid);
            ham.apply(basis[j], hbasis[j], fft, scratch);
        }
        auto append_direction = [&](SpinorState&& dir) {
            for (const auto& b : basis) axpy(dir, -inner(b, dir), b);
            for (const auto& b : basis) axpy(dir, -inner(b, dir), b);
            const double nr = norm(dir);
            if (nr > 1e-7) {
                scale(dir, 1.0 / nr);
                basis.push_back(std::move(dir));
                hbasis.emplace_back(grid);
                ham.apply(basis.back(), hbasis.back(), fft, scratch);
            }
        };
        if (augment) {
            Eigen::MatrixXcd hm(ns, ns);
            for (int i = 0; i < ns; ++i)
                for (int j = 0; j < ns; ++j) hm(i, j) = inner(basis[i], hbasis[j]);
            hm = 0.5 * (hm + hm.adjoint().eval());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hm);
            const Eigen::VectorXd theta = es.eigenvalues();
            const Eigen::MatrixXcd& rot = es.eigenvectors();
            for (int i = 0; i < ns; ++i) {
                SpinorState resid(grid);
                for (int j = 0; j < ns; ++j) axpy(resid, rot(j, i), hbasis[j]);
                SpinorState ritz(grid);
                for (int j = 0; j < ns; ++j) axpy(ritz, rot(j, i), basis[j]);
                axpy(resid, -theta(i), ritz);
                detail::precondition_residual(resid, params, fft, opts.precond_shift);
                antisymmetrize(resid);
                append_direction(std::move(resid));
            }
            for (auto& d : prev_dirs) append_direction(std::move(d));
            prev_dirs.clear();
        }
        const int nb = static_cast<int>(basis.size());
        Eigen::MatrixXcd hm(nb, nb), sm(nb, nb);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) {
                hm(i, j) = inner(basis[i], hbasis[j]);
                sm(i, j) = inner(basis[i], basis[j]);
            }
        hm = 0.5 * (hm + hm.adjoint().eval());
        sm = 0.5 * (sm + sm.adjoint().eval());
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(hm, sm);
        energies = ges.eigenvalues().head(ns);
        const Eigen::MatrixXcd rot = ges.eigenvectors().leftCols(ns);
        std::vector<SpinorState> next(ns, SpinorState(grid));
        std::vector<SpinorState> hnext(ns, SpinorState(grid));
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < nb; ++j) {
                axpy(next[i], rot(j, i), basis[j]);
                axpy(hnext[i], rot(j, i), hbasis[j]);
            }
        // correction parts of the new states, reused next round
        if (augment && nb > ns) {
            for (int i = 0; i < ns; ++i) {
                SpinorState p(grid);
                for (int j = ns; j < nb; ++j) axpy(p, rot(j, i), basis[j]);
                const double np = norm(p);
                if (np > 1e-7) {
                    scale(p, 1.0 / np);
                    prev_dirs.push_back(std::move(p));
                }
            }
        }
        psi = std::move(next);
        for (int i = 0; i < ns; ++i) {
            axpy(hnext[i], -energies(i), psi[i]);
            residuals[i] = norm(hnext[i]);
        }
        detail::gram_schmidt(psi);
    };

    // Phase 1: imaginary-time filtering over the step stages, converging
    // the energies at each stage.
    int total_iter = 0;
    for (std::size_t stage = 0; stage < opts.dtau_stages.size(); ++stage) {
        const bool final_stage = (stage + 1 == opts.dtau_stages.size());
        StepTables tables(ham, opts.dtau_stages[stage]);
        const double stage_tol = final_stage ? opts.tol_energy : 100.0 * opts.tol_energy;
        last_energies.setConstant(1e30);
        while (true) {
            for (int it = 0; it < opts.check_interval; ++it) {
                if (++total_iter > opts.max_iterations) {
                    std::string msg = "solve_lowest: no convergence at F=" +
                                      std::to_string(F) + " V/cm; residuals:";
                    for (double r : residuals) msg += " " + std::to_string(r);
                    throw std::runtime_error(msg);
                }
                for (auto& s : psi) {
                    step_position(s, tables, scratch);
                    step_momentum(s, tables, fft, scratch);
                    step_position(s, tables, scratch);
                    antisymmetrize(s);
                }
                detail::gram_schmidt(psi);
                if (diag && opts.track_energies)
                    for (int i = 0; i < ns; ++i)
                        diag->energy_history[i].push_back(ham.energy(psi[i], fft, scratch));
            }
            ritz_update(false);
            const double de = (energies - last_energies).cwiseAbs().maxCoeff();
            last_energies = energies;
            if (de < stage_tol) break;
        }
    }

    // Phase 2: residual-driven refinement without further splitting
    // steps, removing the finite-step bias of phase 1.
    for (int round = 0; round < opts.max_refine_rounds; ++round) {
        ritz_update(true);
        if (diag && opts.track_energies)
            for (int i = 0; i < ns; ++i) diag->energy_history[i].push_back(energies(i));
        const double de = (energies - last_energies).cwiseAbs().maxCoeff();
        last_energies = energies;
        const double rmax = *std::max_element(residuals.begin(), residuals.end());
        if (rmax < opts.tol_residual && de < opts.tol_energy) break;
        if (round + 1 == opts.max_refine_rounds) {
            std::string msg = "solve_lowest: refinement stalled at F=" + std::to_string(F) +
                              " V/cm; residuals:";
            for (double r : residuals) msg += " " + std::to_string(r);
            throw std::runtime_error(msg);
        }
    }
    if (diag) diag->iterations = total_iter;

    // deterministic ordering: ascending energy, ties broken by
    // descending singlet character then descending left occupation
    std::vector<double> sing(ns), occl(ns), occr(ns);
    for (int i = 0; i < ns; ++i) {
        sing[i] = singlet_character(psi[i]);
        occl[i] = side_occupation(psi[i], Side::left);
        occr[i] = side_occupation(psi[i], Side::right);
    }
    std::vector<int> order(ns);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (std::abs(energies(a) - energies(b)) >= opts.degeneracy_tol)
            return energies(a) < energies(b);
        if (std::abs(sing[a] - sing[b]) > 1e-12) return sing[a] > sing[b];
        return occl[a] > occl[b];
    });

    EigenBasis out;
    out.field_F = F;
    out.detuning_eps = params.eps_of_F(F);
    for (int i : order) {
        out.states.push_back(std::move(psi[i]));
        out.energies.push_back(energies(i));
        out.singlet_char.push_back(sing[i]);
        out.occ_left.push_back(occl[i]);
        out.occ_right.push_back(occr[i]);
        out.residuals.push_back(residuals[i]);
    }
    return out;
}

} // namespace dqd
