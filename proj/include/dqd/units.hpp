#pragma once

#include <cmath>

// Unit conventions used throughout: energies in meV, lengths in nm,
// times in ns, electric fields in V/cm, magnetic fields in T.
// Frequencies in 1/ns are GHz.

namespace dqd::units {

inline constexpr double hbar = 6.582119569e-4;       // meV ns
inline constexpr double planck_h = 4.135667697e-3;   // meV ns
inline constexpr double mu_bohr = 5.788381806e-2;    // meV / T
inline constexpr double hbar2_over_2m0 = 38.0998212; // meV nm^2, free electron
inline constexpr double coulomb_k = 1439.96455;      // e^2/(4 pi eps0), meV nm

// Potential-energy change of an electron at position x (nm) in a field
// F (V/cm): -e x F in meV per unit of x*F.
inline constexpr double meV_per_nm_Vcm = 1e-4;

inline double bohr_frequency_GHz(double delta_e_meV) {
    return std::abs(delta_e_meV) / planck_h;
}

} // namespace dqd::units
