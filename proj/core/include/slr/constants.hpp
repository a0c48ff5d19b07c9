#pragma once

// Unit system: hbar = 1, energies in eV, lengths in nm, times in fs.
// Every occurrence of c in a formula becomes hbar_c numerically.

namespace slr {

inline constexpr double hbar_c = 197.3269804;    // eV nm
inline constexpr double hbar_ev_fs = 0.6582119569; // eV fs

double wavenumber(double omega_ev); // omega/hbar_c [1/nm], rejects omega <= 0

inline double wavelength(double omega_ev) {
  return 6.283185307179586476925287 / wavenumber(omega_ev);
}

} // namespace slr
