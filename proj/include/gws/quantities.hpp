#pragma once

// Working units throughout: energies in meV, lengths in nm, transverse and
// propagation wavevectors in 1/nm, frequencies in 1/s.

namespace gws {

namespace constants {

// hbar in meV s and the graphene Fermi velocity. v_F is a fixed material
// constant of the model, not a configurable parameter.
inline constexpr double hbar_meV_s = 6.582119569e-13;
inline constexpr double v_F_m_per_s = 1.0e6;
inline constexpr double v_F_nm_per_s = 1.0e15;

// hbar * v_F in meV nm; the linear graphene dispersion slope.
inline constexpr double hbar_vF_meV_nm = 658.2119569;

// hbar^2 / (2 m_e) in meV nm^2; scales the parabolic barrier dispersion.
inline constexpr double hbar2_over_2me_meV_nm2 = 38.0998212;

}  // namespace constants

// Linear channel dispersion E = V + hbar v_F k, measured from the local gate
// potential V.
inline double energy_from_wavevector(double k_nm_inv, double V_meV) {
  return V_meV + constants::hbar_vF_meV_nm * k_nm_inv;
}

inline double wavevector_from_energy(double E_meV, double V_meV) {
  return (E_meV - V_meV) / constants::hbar_vF_meV_nm;
}

}  // namespace gws
