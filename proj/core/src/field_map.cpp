#include "slr/field_map.hpp"

#include <cmath>
#include <limits>

#include "slr/constants.hpp"
#include "slr/greens.hpp"
#include "slr/parallel.hpp"

namespace slr {

cd reduced_polarizability(const LatticeSpec& lattice, const ParticleSpec& particle,
                          double k_parallel, double omega) {
  const cd s = lattice_sum_self(lattice, particle, k_parallel, omega);
  const cd den = polarizability_denominator(particle, s, omega);
  const double w0 = particle.omega0;
  return 3.0 * M_PI * hbar_c * hbar_c * hbar_c * particle.gamma0_rad / (w0 * w0 * w0) / den;
}

std::vector<int> central_sites(const LatticeSpec& lattice, int periods) {
  lattice.validate();
  const int half = std::min(periods / 2, lattice.site_count_m / 2);
  std::vector<int> sites;
  for (int n = -half; n <= half; ++n) sites.push_back(n);
  return sites;
}

std::vector<cd> driven_dipole_moments(const LatticeSpec& lattice, const ParticleSpec& particle,
                                      double k_parallel, double omega,
                                      const std::vector<int>& sites) {
  const cd alpha = reduced_polarizability(lattice, particle, k_parallel, omega);
  std::vector<cd> p(sites.size());
  for (size_t i = 0; i < sites.size(); ++i) {
    const double x = sites[i] * lattice.spacing_a;
    p[i] = alpha * std::exp(cd(0.0, k_parallel * x));
  }
  return p;
}

Eigen::Vector3cd total_field(const Vec3& r, const LatticeSpec& lattice,
                             const ParticleSpec& particle, double k_parallel, double omega,
                             const std::vector<int>& sites, const std::vector<cd>& dipoles) {
  const double k = wavenumber(omega);
  const Vec3 axis = lattice.axis.vec();
  const Vec3 eps = particle.orientation.vec();

  // Normal incidence with in-plane Bloch component along the chain.
  const double kz2 = k * k - k_parallel * k_parallel;
  if (kz2 < 0.0) throw physics_error("total_field: evanescent incidence (|k_par| > k)");
  const Vec3 kvec = k_parallel * axis + std::sqrt(kz2) * Vec3(0, 0, 1);

  Eigen::Vector3cd e = std::exp(cd(0.0, kvec.dot(r))) * eps.cast<cd>();
  const double k2 = k * k;
  for (size_t i = 0; i < sites.size(); ++i) {
    const Vec3 d = r - sites[i] * lattice.spacing_a * axis;
    e += k2 * (greens_free_space(d, omega) * (dipoles[i] * eps.cast<cd>()));
  }
  return e;
}

FieldMapResult intensity_map(const FieldGrid& grid, const LatticeSpec& lattice,
                             const ParticleSpec& particle, double k_parallel, double omega,
                             int workers, double mask_radius, int periods) {
  grid.validate();
  lattice.validate();
  particle.validate();

  const auto sites = central_sites(lattice, periods);
  const auto dipoles = driven_dipole_moments(lattice, particle, k_parallel, omega, sites);

  FieldMapResult out;
  out.grid = grid;
  out.intensity.assign(static_cast<size_t>(grid.nx) * grid.nz,
                       std::numeric_limits<double>::quiet_NaN());
  out.masked.assign(out.intensity.size(), 0);

  const Vec3 axis = lattice.axis.vec();
  parallel_for_index(out.intensity.size(), workers, [&](size_t idx) {
    const int iz = static_cast<int>(idx) / grid.nx;
    const int ix = static_cast<int>(idx) % grid.nx;
    const double x = grid.x_min + (grid.x_max - grid.x_min) * ix / (grid.nx - 1);
    const double z = grid.z_min + (grid.z_max - grid.z_min) * iz / (grid.nz - 1);
    const Vec3 r(x, 0.0, z);
    for (int n : sites) {
      if ((r - n * lattice.spacing_a * axis).norm() < mask_radius) {
        out.masked[idx] = 1;
        return;
      }
    }
    out.intensity[idx] = total_field(r, lattice, particle, k_parallel, omega, sites, dipoles)
                             .squaredNorm();
  });
  return out;
}

} // namespace slr
