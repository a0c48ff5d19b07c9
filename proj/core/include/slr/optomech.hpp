#pragma once

#include "slr/chain.hpp"
#include "slr/lattice_sum.hpp"
#include "slr/spectrum.hpp"

namespace slr {

enum class SidebandBranch {
  RedDetuned, // laser below the SLR; anti-Stokes sideband resonant ("+")
  BlueDetuned // laser above the SLR; Stokes sideband resonant ("-")
};

struct OMParams {
  double omega_vib;   // eV
  double gamma_vib;   // eV, phenomenological, >= 0
  double omega_laser; // eV
  SidebandBranch branch = SidebandBranch::RedDetuned;
  double raman_ratio = 0.0; // p/mu0 >= 0
  Vec3 offset_rm = Vec3::Zero();
  UnitVector3 raman_orientation = UnitVector3::y();

  double sign() const { return branch == SidebandBranch::RedDetuned ? 1.0 : -1.0; }
  double sideband() const { return omega_laser + sign() * omega_vib; }

  void validate() const {
    if (omega_vib <= 0.0) throw physics_error("OMParams: omega_vib must be positive");
    if (omega_laser <= 0.0) throw physics_error("OMParams: omega_laser must be positive");
    if (gamma_vib < 0.0) throw physics_error("OMParams: gamma_vib must be >= 0");
    if (raman_ratio < 0.0) throw physics_error("OMParams: raman_ratio must be >= 0");
  }
};

// Laser-induced Raman linewidth Gamma0 (p/mu0)^2 ((w_l +- w_vib)/w0)^3.
double gamma_p(const OMParams& params, const ParticleSpec& particle);

// Sigma_q^OM(w) = +- i S_om^2 / [i(w_l +- w_vib - w) + (Gamma_vib +- gamma_p)/2 -+ i S_p]
cd om_self_energy(cd s_om, cd s_p, const OMParams& params, const ParticleSpec& particle,
                  double omega);

// Array extinction with S -> S_q^mu + Sigma_q^OM. Metadata carries an RWA
// warning when the blue-branch anti-Stokes sideband overlaps the broad
// plasmonic background.
SpectrumResult om_extinction_spectrum(const LatticeSpec& lattice, const ParticleSpec& particle,
                                      const OMParams& om, double k_parallel,
                                      const std::vector<double>& omegas, int workers = 1);

struct SingleModeOMResult {
  std::vector<double> omegas;
  std::vector<double> cavity;    // extinction normalized to the g = 0 curve
  std::vector<double> molecular; // same normalization for the Raman dipole
  double effective_width;        // (Gamma_vib +- gamma_p), the branch-signed width
};

// Fig.-4-style single optical mode coupled to one collective vibration;
// lattice sums dropped, coupling g [eV] an input. Requires the sideband to
// coincide with omega0.
SingleModeOMResult single_mode_om_spectrum(double g, const ParticleSpec& particle,
                                           const OMParams& om,
                                           const std::vector<double>& omegas);

} // namespace slr
