#pragma once

#include <map>
#include <vector>

#include "slr/chain.hpp"
#include "slr/lattice_sum.hpp"
#include "slr/spectrum.hpp"

namespace slr {

// One dipole transition nu -> nu' of a multi-level emitter.
struct TransitionSpec {
  int lower = 1, upper = 2;
  double omega_t;     // eV, omega_{nu'} - omega_{nu} > 0
  double gamma_t_rad; // eV, 0 iff not dipole allowed
  UnitVector3 orientation = UnitVector3::y();
  bool dipole_allowed = true;

  void validate() const {
    if (omega_t <= 0.0) throw physics_error("TransitionSpec: omega_t must be positive");
    if (gamma_t_rad < 0.0) throw physics_error("TransitionSpec: gamma_t_rad must be >= 0");
    if (dipole_allowed != (gamma_t_rad > 0.0))
      throw physics_error("TransitionSpec: gamma_t_rad = 0 iff not dipole_allowed");
    if (upper <= lower) throw physics_error("TransitionSpec: upper level must exceed lower");
  }
};

// Static level populations; inversions are always derived, never stored.
struct PopulationState {
  std::map<int, double> populations;

  double inversion(const TransitionSpec& t) const;
  void validate() const;
};

// Response scalar of one transition with static inversion:
//   R(w) = -i p / [i S p - i(w - w_t) + Gamma_t/2]
// At p = -1 this is exactly the harmonic-oscillator 1/((w_t-w) - S - i Gamma_t/2).
// p > 0 (inverted transition) is rejected; p = 0 short-circuits to zero.
cd transition_response(const TransitionSpec& t, double p_inv, cd s, double omega);

// Per-transition extinction contribution, 3 pi Gamma_t (hbar_c)^2 (w/w_t^3) Im[R].
double transition_extinction_point(const TransitionSpec& t, double p_inv, cd s, double omega);

// Sum over dipole-allowed transitions, each dressed by its own lattice sum.
// metadata gains a cross-coupling warning if two transition energies are
// within 5 max(Gamma_t).
SpectrumResult exciton_extinction_spectrum(const LatticeSpec& lattice,
                                           const std::vector<TransitionSpec>& transitions,
                                           const PopulationState& pop, double k_parallel,
                                           const std::vector<double>& omegas, int workers = 1);

} // namespace slr
