#pragma once

#include "slr/chain.hpp"

namespace slr {

// Retarded dipole lattice sum of the chain itself [eV]:
//   S_q(w) = 3 pi Gamma0 hbar_c (w^2/w0^3) sum_{n != 0} e^{-i q n a} eps.G(n a axis, w).eps
// n runs over [-M/2, M/2] \ {0}; pairs (n, -n) are accumulated from n = 1
// outward to keep the conditionally convergent tail well behaved.
cd lattice_sum_self(const LatticeSpec& lattice, const ParticleSpec& particle,
                    double q, double omega);

// Cross sum between the reference chain and an offset partner sub-lattice
// [eV]; includes the n = 0 term (offset keeps it finite):
//   3 pi Gamma0 ratio hbar_c (w^2/w0^3) sum_{n=-M/2}^{M/2} e^{-i q.(n a axis + r_m)}
//     eps_mu.G(n a axis + r_m, w).eps_partner
cd lattice_sum_cross(const LatticeSpec& lattice, const ParticleSpec& particle,
                     const CrossLatticeSpec& cross, double q, double omega);

// Self sum of the partner sub-lattice [eV]: same structure as
// lattice_sum_self with prefactor scaled by amplitude_ratio^2 and the
// partner orientation; zero-displacement term excluded.
cd lattice_sum_raman_self(const LatticeSpec& lattice, const CrossLatticeSpec& cross,
                          const ParticleSpec& reference, double q, double omega);

} // namespace slr
