#pragma once

#include <utility>

#include "slr/chain.hpp"
#include "slr/lattice_sum.hpp"
#include "slr/spectrum.hpp"

namespace slr {

// (omega0 - omega) - i Gamma0/2 - S  [eV]
cd polarizability_denominator(const ParticleSpec& particle, cd s, double omega);

// Extinction cross section [nm^2]:
//   sigma = 3 pi Gamma0 (hbar_c)^2 (omega/omega0^3) Im[1/den]
// Normalization chosen so the bare particle at resonance gives the textbook
// 3 lambda0^2/(2 pi).
double extinction_point(const ParticleSpec& particle, cd s, double omega);

// sigma(omega) with S_q evaluated at q = k_parallel for each omega.
SpectrumResult extinction_spectrum(const LatticeSpec& lattice, const ParticleSpec& particle,
                                   double k_parallel, const std::vector<double>& omegas,
                                   int workers = 1);

// Extinction over the full (k_parallel, omega) grid, row-major in k.
SpectrumResult dispersion_map(const LatticeSpec& lattice, const ParticleSpec& particle,
                              const SpectrumGrid& grid, int workers = 1);

// lambda_± = (a/m)(1 ± sin theta_inc) [nm]
std::pair<double, double> rayleigh_anomaly(double a, double theta_inc, int m);

} // namespace slr
