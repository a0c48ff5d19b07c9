#include "slr/exciton.hpp"

#include <cmath>

#include "slr/constants.hpp"
#include "slr/parallel.hpp"

namespace slr {

double PopulationState::inversion(const TransitionSpec& t) const {
  const auto lo = populations.find(t.lower);
  const auto hi = populations.find(t.upper);
  const double p_lo = lo == populations.end() ? 0.0 : lo->second;
  const double p_hi = hi == populations.end() ? 0.0 : hi->second;
  return p_hi - p_lo;
}

void PopulationState::validate() const {
  double sum = 0.0;
  for (const auto& [level, p] : populations) {
    if (p < 0.0 || p > 1.0) throw physics_error("PopulationState: populations must lie in [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw physics_error("PopulationState: populations must sum to 1");
}

cd transition_response(const TransitionSpec& t, double p_inv, cd s, double omega) {
  t.validate();
  if (omega <= 0.0) throw physics_error("transition_response: omega must be positive");
  if (p_inv > 0.0)
    throw physics_error("transition_response: population-inverted transition (p_inv > 0) is outside the validity regime");
  if (p_inv == 0.0 || !t.dipole_allowed) return cd(0.0, 0.0);
  const cd i(0.0, 1.0);
  const cd den = i * s * p_inv - i * (omega - t.omega_t) + t.gamma_t_rad / 2.0;
  return -i * p_inv / den;
}

double transition_extinction_point(const TransitionSpec& t, double p_inv, cd s, double omega) {
  const cd r = transition_response(t, p_inv, s, omega);
  const double wt3 = t.omega_t * t.omega_t * t.omega_t;
  return 3.0 * M_PI * t.gamma_t_rad * hbar_c * hbar_c * omega / wt3 * std::imag(r);
}

SpectrumResult exciton_extinction_spectrum(const LatticeSpec& lattice,
                                           const std::vector<TransitionSpec>& transitions,
                                           const PopulationState& pop, double k_parallel,
                                           const std::vector<double>& omegas, int workers) {
  lattice.validate();
  pop.validate();
  if (transitions.empty()) throw physics_error("exciton_extinction_spectrum: no transitions");

  double max_gamma = 0.0;
  std::vector<double> inversions;
  for (const auto& t : transitions) {
    t.validate();
    max_gamma = std::max(max_gamma, t.gamma_t_rad);
    inversions.push_back(pop.inversion(t)); // validates the regime eagerly
    if (inversions.back() > 0.0)
      throw physics_error("exciton_extinction_spectrum: transition " + std::to_string(t.lower) +
                          "->" + std::to_string(t.upper) + " is population inverted");
  }

  SpectrumResult r;
  r.grid.omegas = omegas;
  r.grid.k_parallels = {k_parallel};
  r.grid.validate();
  r.units = "nm^2";
  r.values.assign(omegas.size(), 0.0);

  for (size_t a = 0; a < transitions.size(); ++a)
    for (size_t b = a + 1; b < transitions.size(); ++b)
      if (std::abs(transitions[a].omega_t - transitions[b].omega_t) < 5.0 * max_gamma)
        r.metadata["cross_coupling_warning"] =
            "transition energies closer than 5 max(Gamma_t); neglected cross-couplings may matter";

  parallel_for_index(omegas.size(), workers, [&](size_t i) {
    const double w = omegas[i];
    double acc = 0.0;
    for (size_t ti = 0; ti < transitions.size(); ++ti) {
      const auto& t = transitions[ti];
      if (!t.dipole_allowed || inversions[ti] == 0.0) continue;
      ParticleSpec as_particle{t.omega_t, t.gamma_t_rad, t.orientation};
      const cd s = lattice_sum_self(lattice, as_particle, k_parallel, w);
      acc += transition_extinction_point(t, inversions[ti], s, w);
    }
    r.values[i] = acc;
  });
  return r;
}

} // namespace slr
