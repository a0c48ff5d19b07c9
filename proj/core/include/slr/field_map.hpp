#pragma once

#include "slr/chain.hpp"
#include "slr/linear_response.hpp"

namespace slr {

// Sampling plane y = 0 (chain along x by convention of LatticeSpec::axis).
struct FieldGrid {
  double x_min, x_max;
  double z_min, z_max;
  int nx, nz;

  void validate() const {
    if (nx < 2 || nz < 2 || x_max <= x_min || z_max <= z_min)
      throw physics_error("FieldGrid: bad extent");
  }
};

struct FieldMapResult {
  FieldGrid grid;
  std::vector<double> intensity; // row-major over (iz, ix); NaN where masked
  std::vector<char> masked;
  std::map<std::string, std::string> metadata;
};

// Reduced scalar polarizability [nm^3]: 3 pi (hbar_c)^3 Gamma0/omega0^3 / den.
cd reduced_polarizability(const LatticeSpec& lattice, const ParticleSpec& particle,
                          double k_parallel, double omega);

// Per-site dipole amplitude p_n = alpha(omega) e^{i k_par x_n} for unit drive.
std::vector<cd> driven_dipole_moments(const LatticeSpec& lattice, const ParticleSpec& particle,
                                      double k_parallel, double omega,
                                      const std::vector<int>& sites);

// Central sites used for field evaluation: |n| <= periods/2 (periods even).
std::vector<int> central_sites(const LatticeSpec& lattice, int periods = 10);

// E(r) = eps e^{i k.r} + (w/hbar_c)^2 sum_n G(r - r_n, w) (p_n eps); unit
// incident amplitude, propagation normal to the chain plane.
Eigen::Vector3cd total_field(const Vec3& r, const LatticeSpec& lattice,
                             const ParticleSpec& particle, double k_parallel, double omega,
                             const std::vector<int>& sites, const std::vector<cd>& dipoles);

// |E|^2 on the grid; points within mask_radius of a particle are masked.
FieldMapResult intensity_map(const FieldGrid& grid, const LatticeSpec& lattice,
                             const ParticleSpec& particle, double k_parallel, double omega,
                             int workers = 1, double mask_radius = 10.0, int periods = 10);

} // namespace slr
