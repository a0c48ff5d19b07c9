#include "slr/pump_probe.hpp"

#include <cmath>
#include <limits>

#include <unsupported/Eigen/FFT>

#include "slr/constants.hpp"
#include "slr/lattice_sum.hpp"
#include "slr/parallel.hpp"

namespace slr {
namespace {

constexpr double two_pi = 6.283185307179586476925287;

bool same_grid(const FrequencyGrid& a, const FrequencyGrid& b) {
  return std::abs(a.omega_start - b.omega_start) < 1e-9 &&
         std::abs(a.domega - b.domega) < 1e-12 && a.n == b.n;
}

bool driven_mode(std::optional<double> q, double target) {
  return !q.has_value() || std::abs(*q - target) < 1e-12;
}

ParticleSpec as_particle(const TransitionSpec& t) {
  return ParticleSpec{t.omega_t, t.gamma_t_rad, t.orientation};
}

} // namespace

Line pulse_spectrum(const PulseSpec& p, const FrequencyGrid& grid) {
  p.validate();
  grid.validate();
  const double tau = p.temporal_width / hbar_ev_fs; // 1/eV
  const double d = p.delay_fs / hbar_ev_fs;
  Line out{grid, std::vector<cd>(grid.n)};
  const double norm = p.amplitude * tau * std::sqrt(two_pi);
  for (int k = 0; k < grid.n; ++k) {
    const double w = grid.omega(k);
    const double dw = w - p.center_omega;
    out.v[k] = norm * std::exp(-tau * tau * dw * dw / 2.0) * std::exp(cd(0.0, w * d));
  }
  return out;
}

Line conj_reflect(const Line& a) {
  const int n = a.size();
  Line out;
  out.grid.domega = a.grid.domega;
  out.grid.n = n;
  out.grid.omega_start = -(a.grid.omega_start + (n - 1) * a.grid.domega);
  out.v.resize(n);
  for (int k = 0; k < n; ++k) out.v[k] = std::conj(a.v[n - 1 - k]);
  return out;
}

Line convolve(const Line& a, const Line& b) {
  if (std::abs(a.grid.domega - b.grid.domega) > 1e-12)
    throw physics_error("convolve: grid spacings differ");
  const int na = a.size(), nb = b.size();
  Line out;
  out.grid.domega = a.grid.domega;
  out.grid.omega_start = a.grid.omega_start + b.grid.omega_start;
  out.grid.n = na + nb - 1;
  out.v.assign(out.grid.n, cd(0.0, 0.0));
  const double scale = a.grid.domega / two_pi;
  for (int k = 0; k < out.grid.n; ++k) {
    const int j0 = std::max(0, k - nb + 1);
    const int j1 = std::min(na - 1, k);
    cd acc(0.0, 0.0);
    for (int j = j0; j <= j1; ++j) acc += a.v[j] * b.v[k - j];
    out.v[k] = scale * acc;
  }
  return out;
}

Line convolve_fft(const Line& a, const Line& b) {
  if (std::abs(a.grid.domega - b.grid.domega) > 1e-12)
    throw physics_error("convolve_fft: grid spacings differ");
  const int n_lin = a.size() + b.size() - 1;
  int n = 1;
  while (n < n_lin) n <<= 1;

  std::vector<cd> pa(a.v), pb(b.v);
  pa.resize(n, cd(0.0, 0.0));
  pb.resize(n, cd(0.0, 0.0));
  Eigen::FFT<double> fft;
  std::vector<cd> fa(n), fb(n);
  fft.fwd(fa, pa);
  fft.fwd(fb, pb);
  for (int k = 0; k < n; ++k) fa[k] *= fb[k];
  std::vector<cd> prod(n);
  fft.inv(prod, fa);

  Line out;
  out.grid.domega = a.grid.domega;
  out.grid.omega_start = a.grid.omega_start + b.grid.omega_start;
  out.grid.n = n_lin;
  out.v.assign(prod.begin(), prod.begin() + n_lin);
  const double scale = a.grid.domega / two_pi;
  for (auto& x : out.v) x *= scale;
  return out;
}

Line hermitian_im(const Line& a) {
  const int n = a.size();
  const double center = a.grid.omega_start + (n - 1) * a.grid.domega / 2.0;
  if (std::abs(center) > 1e-9)
    throw physics_error("hermitian_im: grid must be symmetric about omega = 0");
  Line out{a.grid, std::vector<cd>(n)};
  const cd two_i(0.0, 2.0);
  for (int k = 0; k < n; ++k) out.v[k] = (a.v[k] - std::conj(a.v[n - 1 - k])) / two_i;
  return out;
}

Line first_order_coherence(const LatticeSpec& lattice, const TransitionSpec& t12,
                           double p_inv0, const PulseSpec& pump, double k_parallel,
                           const FrequencyGrid& grid, std::optional<double> q) {
  t12.validate();
  if (p_inv0 > 0.0)
    throw physics_error("first_order_coherence: p_inv0 > 0 is outside the validity regime");
  Line out{grid, std::vector<cd>(grid.n, cd(0.0, 0.0))};
  if (!driven_mode(q, k_parallel) || p_inv0 == 0.0 || pump.amplitude == 0.0) return out;

  const Line f = pulse_spectrum(pump, grid);
  const ParticleSpec part = as_particle(t12);
  const cd i(0.0, 1.0);
  for (int k = 0; k < grid.n; ++k) {
    const double w = grid.omega(k);
    const cd s = lattice_sum_self(lattice, part, k_parallel, w);
    const cd den = i * s * p_inv0 - i * (w - t12.omega_t) + t12.gamma_t_rad / 2.0;
    out.v[k] = -p_inv0 * f.v[k] / den;
  }
  return out;
}

PopulationSpectrum second_order_population(const Line& sigma, const LatticeSpec& lattice,
                                           const TransitionSpec& t12, const PulseSpec& pump,
                                           double k_parallel, double eps_reg,
                                           std::optional<double> q) {
  t12.validate();
  if (eps_reg <= 0.0) throw physics_error("second_order_population: eps_reg must be positive");

  const Line sigma_star = conj_reflect(sigma);

  // S sigma on the coherence grid (all frequencies there are positive).
  Line s_sigma = sigma;
  const ParticleSpec part = as_particle(t12);
  for (int k = 0; k < sigma.size(); ++k) {
    const double w = sigma.omega(k);
    if (w <= 0.0) throw physics_error("second_order_population: coherence grid must be positive");
    s_sigma.v[k] = lattice_sum_self(lattice, part, k_parallel, w) * sigma.v[k];
  }
  const Line f = pulse_spectrum(pump, sigma.grid);

  const Line c_ss = convolve(sigma_star, sigma);
  const Line c_s_ssig = convolve(sigma_star, s_sigma);
  const Line c_sf = convolve(sigma_star, f);
  const Line c_fs = conj_reflect(c_sf);
  const Line im_part = hermitian_im(c_s_ssig);

  PopulationSpectrum out;
  out.eps_reg = eps_reg;
  out.rhs = c_ss;
  const bool zero = !driven_mode(q, 0.0);
  for (int k = 0; k < out.rhs.size(); ++k) {
    out.rhs.v[k] = zero ? cd(0.0, 0.0)
                        : -t12.gamma_t_rad * c_ss.v[k] - 2.0 * im_part.v[k] + c_sf.v[k] + c_fs.v[k];
  }

  const int mid = (out.rhs.size() - 1) / 2;
  if (std::abs(out.rhs.omega(mid)) > 1e-9)
    throw physics_error("second_order_population: grid does not contain omega = 0");
  out.rhs_zero = out.rhs.v[mid];

  out.p = out.rhs;
  for (int k = 0; k < out.p.size(); ++k)
    out.p.v[k] = out.rhs.v[k] / cd(eps_reg, -out.p.omega(k));
  // omega = 0 is removable when rhs_zero vanishes (radiated = absorbed, the
  // transient-population identity); plain division would leave a hole there.
  out.p.v[mid] = out.rhs_zero / eps_reg +
                 cd(0.0, 1.0) * (out.rhs.v[mid + 1] - out.rhs.v[mid - 1]) /
                     (2.0 * out.rhs.grid.domega);
  return out;
}

namespace {

// int_0^infty dt exp(-(t-d)^2/(2 tau^2)) exp(-ic(t-d)) exp((iw - eps) t),
// the probe-pulse x population-step overlap. Composite Simpson; the
// integrand is a Gaussian window times a bounded oscillation.
cd pole_overlap(double w, double c, double tau, double d, double eps) {
  const double t_hi = std::max(0.0, d) + 10.0 * tau;
  if (t_hi <= 0.0) return cd(0.0, 0.0);
  // Resolve both the envelope and the oscillation at w - c.
  const double osc = std::abs(w - c);
  double dt = std::min(tau / 8.0, osc > 1e-9 ? two_pi / (24.0 * osc) : tau / 8.0);
  int steps = static_cast<int>(std::ceil(t_hi / dt));
  if (steps % 2 == 1) ++steps;
  dt = t_hi / steps;

  auto integrand = [&](double t) {
    const double u = (t - d) / tau;
    return std::exp(cd(-u * u / 2.0 - eps * t, (w - c) * t + c * d));
  };
  cd acc = integrand(0.0) + integrand(t_hi);
  for (int j = 1; j < steps; ++j)
    acc += (j % 2 == 1 ? 4.0 : 2.0) * integrand(j * dt);
  return acc * dt / 3.0;
}

} // namespace

Line third_order_coherence(const PopulationSpectrum& population, const LatticeSpec& lattice,
                           const TransitionSpec& t23, const PulseSpec& probe,
                           double k_parallel, std::optional<double> q, int workers) {
  t23.validate();
  probe.validate();

  const double dw = population.p.grid.domega;
  const double tau = probe.temporal_width / hbar_ev_fs;
  const double d = probe.delay_fs / hbar_ev_fs;

  // Probe pulse window: wide enough that the Gaussian decays below 1e-12.
  const int half_f = static_cast<int>(std::ceil(8.0 / (tau * dw)));
  FrequencyGrid fgrid{probe.center_omega - half_f * dw, dw, 2 * half_f + 1};
  const Line fprobe = pulse_spectrum(probe, fgrid);

  // Smooth part of P: the w = 0 pole is removed and convolved separately.
  Line p_reg = population.rhs;
  for (int k = 0; k < p_reg.size(); ++k)
    p_reg.v[k] = (population.rhs.v[k] - population.rhs_zero) /
                 cd(population.eps_reg, -p_reg.omega(k));
  // Removable singularity at the center point: limit is i RHS'(0).
  const int mid = (p_reg.size() - 1) / 2;
  p_reg.v[mid] = cd(0.0, 1.0) *
                 (population.rhs.v[mid + 1] - population.rhs.v[mid - 1]) /
                 (2.0 * p_reg.grid.domega);

  Line numerator = convolve(fprobe, p_reg);
  if (!driven_mode(q, k_parallel)) {
    for (auto& x : numerator.v) x = cd(0.0, 0.0);
    return numerator;
  }

  Line out = numerator;
  const ParticleSpec part = as_particle(t23);
  const double pole_norm = probe.amplitude; // tau sqrt(2pi) is in F, not f(t)
  const cd i(0.0, 1.0);
  parallel_for_index(out.v.size(), workers, [&](size_t k) {
    const double w = out.omega(static_cast<int>(k));
    if (w <= 0.0) { out.v[k] = cd(0.0, 0.0); return; }
    const cd pole = population.rhs_zero * pole_norm *
                    pole_overlap(w, probe.center_omega, tau, d, population.eps_reg);
    const cd s = lattice_sum_self(lattice, part, k_parallel, w);
    const cd den = t23.gamma_t_rad / 2.0 - i * s - i * (w - t23.omega_t);
    out.v[k] = (numerator.v[k] + pole) / den;
  });
  return out;
}

BandSpectrum band_extinction(const Line& coherence, const Line& pulse,
                             const TransitionSpec& t, double floor) {
  if (!same_grid(coherence.grid, pulse.grid))
    throw physics_error("band_extinction: coherence and pulse grids differ");
  double fmax = 0.0;
  for (const auto& x : pulse.v) fmax = std::max(fmax, std::abs(x));
  const double cutoff = floor * fmax;

  BandSpectrum out;
  out.omegas.resize(coherence.size());
  out.values.assign(coherence.size(), std::numeric_limits<double>::quiet_NaN());
  out.masked.assign(coherence.size(), 1);
  const double wt3 = t.omega_t * t.omega_t * t.omega_t;
  const cd i(0.0, 1.0);
  for (int k = 0; k < coherence.size(); ++k) {
    const double w = coherence.omega(k);
    out.omegas[k] = w;
    if (std::abs(pulse.v[k]) <= cutoff || w <= 0.0) continue;
    out.masked[k] = 0;
    out.values[k] = 3.0 * M_PI * t.gamma_t_rad * hbar_c * hbar_c * w / wt3 *
                    std::imag(i * coherence.v[k] / pulse.v[k]);
  }
  return out;
}

PumpProbeResult run_pump_probe(const LatticeSpec& lattice, const TransitionSpec& t12,
                               const TransitionSpec& t23, double p_inv0,
                               const PulseSpec& pump, const PulseSpec& probe,
                               double k_parallel, double domega, double half_span,
                               double eps_reg, int workers) {
  lattice.validate();
  t12.validate();
  t23.validate();
  pump.validate();
  probe.validate();
  if (domega <= 0.0 || half_span <= 0.0)
    throw physics_error("run_pump_probe: bad grid parameters");
  const double tau_p = pump.temporal_width / hbar_ev_fs;
  if (half_span < 8.0 / tau_p + std::abs(pump.center_omega - t12.omega_t))
    throw physics_error("run_pump_probe: half_span too small for the pump bandwidth");

  const int half = static_cast<int>(std::round(half_span / domega));
  FrequencyGrid g12{t12.omega_t - half * domega, domega, 2 * half + 1};

  PumpProbeResult r;
  r.sigma12 = first_order_coherence(lattice, t12, p_inv0, pump, k_parallel, g12);
  r.population = second_order_population(r.sigma12, lattice, t12, pump, k_parallel, eps_reg);
  r.sigma23 = third_order_coherence(r.population, lattice, t23, probe, k_parallel,
                                    std::nullopt, workers);

  const Line f12 = pulse_spectrum(pump, g12);
  r.pump_band = band_extinction(r.sigma12, f12, t12);
  const Line f23 = pulse_spectrum(probe, r.sigma23.grid);
  r.probe_band = band_extinction(r.sigma23, f23, t23);
  return r;
}

} // namespace slr
