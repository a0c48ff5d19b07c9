#include "slr/linear_response.hpp"

#include <cmath>

#include "slr/constants.hpp"
#include "slr/parallel.hpp"

namespace slr {

cd polarizability_denominator(const ParticleSpec& particle, cd s, double omega) {
  if (omega <= 0.0) throw physics_error("polarizability_denominator: omega must be positive");
  return cd(particle.omega0 - omega, -particle.gamma0_rad / 2.0) - s;
}

double extinction_point(const ParticleSpec& particle, cd s, double omega) {
  const cd den = polarizability_denominator(particle, s, omega);
  const double w0 = particle.omega0;
  const double pref = 3.0 * M_PI * particle.gamma0_rad * hbar_c * hbar_c * omega / (w0 * w0 * w0);
  return pref * std::imag(1.0 / den);
}

SpectrumResult extinction_spectrum(const LatticeSpec& lattice, const ParticleSpec& particle,
                                   double k_parallel, const std::vector<double>& omegas,
                                   int workers) {
  lattice.validate();
  particle.validate();
  SpectrumResult r;
  r.grid.omegas = omegas;
  r.grid.k_parallels = {k_parallel};
  r.grid.validate();
  r.units = "nm^2";
  r.values.resize(omegas.size());
  parallel_for_index(omegas.size(), workers, [&](size_t i) {
    const cd s = lattice_sum_self(lattice, particle, k_parallel, omegas[i]);
    r.values[i] = extinction_point(particle, s, omegas[i]);
  });
  return r;
}

SpectrumResult dispersion_map(const LatticeSpec& lattice, const ParticleSpec& particle,
                              const SpectrumGrid& grid, int workers) {
  lattice.validate();
  particle.validate();
  grid.validate();
  if (grid.k_parallels.empty()) throw physics_error("dispersion_map: empty k_parallel axis");
  SpectrumResult r;
  r.grid = grid;
  r.units = "nm^2";
  const size_t nw = grid.omegas.size();
  r.values.resize(grid.k_parallels.size() * nw);
  parallel_for_index(r.values.size(), workers, [&](size_t idx) {
    const double q = grid.k_parallels[idx / nw];
    const double w = grid.omegas[idx % nw];
    const cd s = lattice_sum_self(lattice, particle, q, w);
    r.values[idx] = extinction_point(particle, s, w);
  });
  return r;
}

std::pair<double, double> rayleigh_anomaly(double a, double theta_inc, int m) {
  if (a <= 0.0) throw physics_error("rayleigh_anomaly: spacing must be positive");
  if (m < 1) throw physics_error("rayleigh_anomaly: order must be >= 1");
  if (std::abs(theta_inc) >= M_PI / 2.0) throw physics_error("rayleigh_anomaly: |theta| must be < pi/2");
  const double s = std::sin(theta_inc);
  return {a / m * (1.0 + s), a / m * (1.0 - s)};
}

} // namespace slr
