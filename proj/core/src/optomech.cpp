#include "slr/optomech.hpp"

#include <cmath>
#include <limits>

#include "slr/constants.hpp"
#include "slr/linear_response.hpp"
#include "slr/parallel.hpp"

namespace slr {

double gamma_p(const OMParams& params, const ParticleSpec& particle) {
  params.validate();
  particle.validate();
  const double x = params.sideband() / particle.omega0;
  return particle.gamma0_rad * params.raman_ratio * params.raman_ratio * x * x * x;
}

cd om_self_energy(cd s_om, cd s_p, const OMParams& params, const ParticleSpec& particle,
                  double omega) {
  const double sgn = params.sign();
  const double gp = gamma_p(params, particle);
  const cd den = cd(0.0, 1.0) * (params.sideband() - omega)
               + (params.gamma_vib + sgn * gp) / 2.0
               - sgn * cd(0.0, 1.0) * s_p;
  if (std::abs(den) < 1e-12)
    throw physics_error("om_self_energy: vibrational denominator vanishes");
  return sgn * cd(0.0, 1.0) * s_om * s_om / den;
}

SpectrumResult om_extinction_spectrum(const LatticeSpec& lattice, const ParticleSpec& particle,
                                      const OMParams& om, double k_parallel,
                                      const std::vector<double>& omegas, int workers) {
  lattice.validate();
  particle.validate();
  om.validate();

  CrossLatticeSpec cross;
  cross.offset_rm = om.offset_rm;
  cross.partner_orientation = om.raman_orientation;
  cross.amplitude_ratio = om.raman_ratio;

  SpectrumResult r;
  r.grid.omegas = omegas;
  r.grid.k_parallels = {k_parallel};
  r.grid.validate();
  r.units = "nm^2";
  r.values.resize(omegas.size());
  std::atomic<bool> singular{false};
  parallel_for_index(omegas.size(), workers, [&](size_t i) {
    const double w = omegas[i];
    const cd s_mu = lattice_sum_self(lattice, particle, k_parallel, w);
    try {
      cd sigma(0.0, 0.0);
      if (om.raman_ratio > 0.0) {
        const cd s_om = lattice_sum_cross(lattice, particle, cross, k_parallel, w);
        const cd s_p = lattice_sum_raman_self(lattice, cross, particle, k_parallel, w);
        sigma = om_self_energy(s_om, s_p, om, particle, w);
      }
      r.values[i] = extinction_point(particle, s_mu + sigma, w);
    } catch (const physics_error&) {
      r.values[i] = std::numeric_limits<double>::quiet_NaN();
      singular = true;
    }
  });
  if (singular) r.metadata["singular_samples"] = "masked";
  // RWA is unreliable when the resonant sideband sits on the broad LSP
  // background (relevant for blue detuning).
  if (om.branch == SidebandBranch::BlueDetuned &&
      std::abs(om.omega_laser + om.omega_vib - particle.omega0) < 2.0 * particle.gamma0_rad)
    r.metadata["rwa_warning"] =
        "anti-Stokes sideband overlaps the plasmonic background; RWA unreliable";
  return r;
}

SingleModeOMResult single_mode_om_spectrum(double g, const ParticleSpec& particle,
                                           const OMParams& om,
                                           const std::vector<double>& omegas) {
  particle.validate();
  om.validate();
  if (g < 0.0) throw physics_error("single_mode_om_spectrum: g must be >= 0");
  if (std::abs(om.sideband() - particle.omega0) > 1e-9)
    throw physics_error("single_mode_om_spectrum: requires omega0 = omega_laser +- omega_vib");

  const double sgn = om.sign();
  const double gp = gamma_p(om, particle);
  const double w_sb = om.sideband();
  const double w0 = particle.omega0;
  const double g0 = particle.gamma0_rad;
  const double width0 = (om.gamma_vib + sgn * gp) / 2.0;

  SingleModeOMResult out;
  out.omegas = omegas;
  out.cavity.resize(omegas.size());
  out.molecular.resize(omegas.size());
  out.effective_width = om.gamma_vib + sgn * gp;

  for (size_t i = 0; i < omegas.size(); ++i) {
    const double w = omegas[i];
    // Cavity: bare SLR-less polarizability dressed by the vibrational mode.
    const cd vib_den = cd(0.0, 1.0) * (w_sb - w) + width0;
    const cd sigma = sgn * cd(0.0, 1.0) * g * g / vib_den;
    const double dressed = std::imag(1.0 / (cd(w0 - w, -g0 / 2.0) - sigma));
    const double bare = std::imag(1.0 / cd(w0 - w, -g0 / 2.0));
    out.cavity[i] = dressed / bare;

    // Molecular mirror: vibration dressed by the optical mode. The plasmon
    // adds branch-signed broadening (cooling) or narrowing (heating). The
    // baseline is the vibration without any optomechanical interaction, so
    // once gamma_p exceeds Gamma_vib the heated branch flips sign: gain.
    const double w_eff = width0 + sgn * g * g * std::real(1.0 / cd(g0 / 2.0, -(w0 - w)));
    const double mol = std::imag(1.0 / cd(w_sb - w, -w_eff));
    const double mol0 = std::imag(1.0 / cd(w_sb - w, -om.gamma_vib / 2.0));
    out.molecular[i] = mol / mol0;
  }
  return out;
}

} // namespace slr
