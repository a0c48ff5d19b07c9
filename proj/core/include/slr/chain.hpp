#pragma once

#include "slr/dyadic.hpp"

namespace slr {

// Single resonant dipole: frequency omega0 [eV], radiative width gamma0_rad
// [eV], orientation of the transition dipole.
struct ParticleSpec {
  double omega0;
  double gamma0_rad;
  UnitVector3 orientation = UnitVector3::y();

  void validate() const {
    if (omega0 <= 0.0) throw physics_error("ParticleSpec: omega0 must be positive");
    if (gamma0_rad <= 0.0) throw physics_error("ParticleSpec: gamma0_rad must be positive");
  }
};

// Finite 1D chain: sites r_n = n a axis, n in {-M/2,...,-1,1,...,M/2}
// relative to a central site.
struct LatticeSpec {
  double spacing_a;     // nm
  int site_count_m;     // positive even
  UnitVector3 axis = UnitVector3::x();

  void validate() const {
    if (spacing_a <= 0.0) throw physics_error("LatticeSpec: spacing_a must be positive");
    if (site_count_m < 2) throw physics_error("LatticeSpec: site_count_m must be >= 2");
    if (site_count_m % 2 != 0) throw physics_error("LatticeSpec: site_count_m must be even");
  }
};

// Second sub-lattice at per-site offset r_m, with its own dipole orientation
// and amplitude relative to the reference dipole (e.g. p/mu0).
struct CrossLatticeSpec {
  Vec3 offset_rm = Vec3::Zero();   // nm
  UnitVector3 partner_orientation = UnitVector3::y();
  double amplitude_ratio = 0.0;    // >= 0

  void validate() const {
    if (amplitude_ratio < 0.0) throw physics_error("CrossLatticeSpec: amplitude_ratio must be >= 0");
  }
};

} // namespace slr
