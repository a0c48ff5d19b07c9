#include "slr/lattice_sum.hpp"

#include <cmath>

#include "slr/constants.hpp"

namespace slr {
namespace {

// eps_a . G(r, w) . eps_b without materializing the 3x3 tensor.
cd projected_greens(const Vec3& rvec, double k, const UnitVector3& ea, const UnitVector3& eb) {
  const double r = rvec.norm();
  if (r <= 0.0) throw physics_error("lattice sum: zero displacement hits the Green's singularity");
  const cd ik(0.0, k);
  const cd phase = std::exp(ik * r) / (4.0 * M_PI * k * k);
  const double r2 = r * r, r3 = r2 * r;
  const cd a = phase * (cd(k * k / r, 0.0) + ik / r2 - cd(1.0 / r3, 0.0));
  const cd b = phase * (cd(-k * k / r, 0.0) - 3.0 * ik / r2 + cd(3.0 / r3, 0.0));
  const Vec3 n = rvec / r;
  const double dab = ea.vec().dot(eb.vec());
  return a * dab + b * (ea.vec().dot(n)) * (eb.vec().dot(n));
}

double prefactor(const ParticleSpec& p, double omega) {
  return 3.0 * M_PI * p.gamma0_rad * hbar_c * omega * omega / (p.omega0 * p.omega0 * p.omega0);
}

} // namespace

cd lattice_sum_self(const LatticeSpec& lattice, const ParticleSpec& particle,
                    double q, double omega) {
  lattice.validate();
  particle.validate();
  const double k = wavenumber(omega);
  const double a = lattice.spacing_a;
  const UnitVector3& eps = particle.orientation;

  // Collinear geometry: the projection is a function of |n| only, so each
  // (n, -n) pair reduces to 2 cos(q n a) eps.G(n a).eps.
  cd acc(0.0, 0.0);
  for (int n = 1; n <= lattice.site_count_m / 2; ++n) {
    const cd g = projected_greens(n * a * lattice.axis.vec(), k, eps, eps);
    acc += 2.0 * std::cos(q * n * a) * g;
  }
  return prefactor(particle, omega) * acc;
}

cd lattice_sum_cross(const LatticeSpec& lattice, const ParticleSpec& particle,
                     const CrossLatticeSpec& cross, double q, double omega) {
  lattice.validate();
  particle.validate();
  cross.validate();
  const double k = wavenumber(omega);
  const double a = lattice.spacing_a;
  const Vec3 axis = lattice.axis.vec();

  const cd jq(0.0, -q);
  cd acc = std::exp(jq * axis.dot(cross.offset_rm)) *
           projected_greens(cross.offset_rm, k, particle.orientation, cross.partner_orientation);
  for (int n = 1; n <= lattice.site_count_m / 2; ++n) {
    for (const int s : {n, -n}) {
      const Vec3 d = s * a * axis + cross.offset_rm;
      acc += std::exp(jq * (s * a + axis.dot(cross.offset_rm))) *
             projected_greens(d, k, particle.orientation, cross.partner_orientation);
    }
  }
  return prefactor(particle, omega) * cross.amplitude_ratio * acc;
}

cd lattice_sum_raman_self(const LatticeSpec& lattice, const CrossLatticeSpec& cross,
                          const ParticleSpec& reference, double q, double omega) {
  lattice.validate();
  reference.validate();
  cross.validate();
  const double k = wavenumber(omega);
  const double a = lattice.spacing_a;
  const UnitVector3& eps = cross.partner_orientation;

  cd acc(0.0, 0.0);
  for (int n = 1; n <= lattice.site_count_m / 2; ++n) {
    const cd g = projected_greens(n * a * lattice.axis.vec(), k, eps, eps);
    acc += 2.0 * std::cos(q * n * a) * g;
  }
  const double r2 = cross.amplitude_ratio * cross.amplitude_ratio;
  return prefactor(reference, omega) * r2 * acc;
}

} // namespace slr
