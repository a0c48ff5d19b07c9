#pragma once

#include <optional>
#include <vector>

#include "slr/exciton.hpp"

namespace slr {

// Gaussian pulse. temporal_width is the envelope standard deviation in fs
// (callers quoting an intensity-style FWHM convert with fwhm/(2 sqrt(2 ln 2))).
struct PulseSpec {
  double center_omega;  // eV
  double temporal_width; // fs, > 0
  double amplitude = 1.0;
  double delay_fs = 0.0;

  void validate() const {
    if (center_omega <= 0.0) throw physics_error("PulseSpec: center_omega must be positive");
    if (temporal_width <= 0.0) throw physics_error("PulseSpec: temporal_width must be positive");
  }
};

// Uniform frequency grid omega_start + k domega, k in [0, n).
struct FrequencyGrid {
  double omega_start; // eV, may be negative (population spectra live around 0)
  double domega;      // eV
  int n;

  void validate() const {
    if (n < 2 || domega <= 0.0) throw physics_error("FrequencyGrid: bad grid");
  }
  double omega(int k) const { return omega_start + k * domega; }
};

// Complex samples on a FrequencyGrid.
struct Line {
  FrequencyGrid grid;
  std::vector<cd> v;

  double omega(int k) const { return grid.omega(k); }
  int size() const { return static_cast<int>(v.size()); }
};

// F(omega) = eta tau sqrt(2 pi) exp(-tau^2 (omega-center)^2 / 2) e^{i omega delay/hbar},
// tau and delay converted to 1/eV internally (convention F(w) = int f(t) e^{iwt} dt).
Line pulse_spectrum(const PulseSpec& p, const FrequencyGrid& grid);

// L'(w) = conj(L(-w)); the spectrum of the conjugated time signal.
Line conj_reflect(const Line& a);

// (f*g)(w_i) = (dw/2pi) sum_j f(w_j) g(w_i - w_j), linear (zero-padded)
// convolution with offset bookkeeping; output grid starts at the sum of the
// input starts. Direct quadrature.
Line convolve(const Line& a, const Line& b);

// FFT fast path; agrees with convolve to better than 1e-10 relative.
Line convolve_fft(const Line& a, const Line& b);

// Hermitian imaginary part on a zero-symmetric grid:
//   Im_H[X](w) = (X(w) - conj(X(-w))) / 2i,
// the spectrum of Im x(t). Requires the grid to be symmetric about 0.
Line hermitian_im(const Line& a);

// First-order pump-driven coherence at q = k_parallel:
//   sigma12(w) = -p0 f_p(w - w_p) / (i S_q(w) p0 - i(w - w12) + Gamma12/2).
// Any other q is identically zero (exact momentum selection).
Line first_order_coherence(const LatticeSpec& lattice, const TransitionSpec& t12,
                           double p_inv0, const PulseSpec& pump, double k_parallel,
                           const FrequencyGrid& grid,
                           std::optional<double> q = std::nullopt);

struct PopulationSpectrum {
  Line p;        // population of the upper pump level at q = 0
  Line rhs;      // right-hand side before division by (-i w + eps)
  cd rhs_zero;   // RHS at w = 0 (the pole weight)
  double eps_reg;
};

// Second-order zero-momentum population created by the pump:
//   -i w P = -Gamma12 [s* x s] - 2 Im_H[s* x (S s)] + [s* x f] + [s x f*],
// divided by (-i w + eps_reg). The output grid is the (zero-centered)
// convolution grid of the inputs.
PopulationSpectrum second_order_population(const Line& first_order, const LatticeSpec& lattice,
                                           const TransitionSpec& t12, const PulseSpec& pump,
                                           double k_parallel, double eps_reg = 1e-6,
                                           std::optional<double> q = std::nullopt);

// Third-order probe coherence at q = k_parallel:
//   sigma23(w) = [f_p' * P](w) / (Gamma23/2 - i S_q^23(w) - i(w - w23)).
// The population pole at w = 0 is convolved with the probe pulse
// semi-analytically (Gaussian times one-sided exponential) so that negative
// pulse delays stay causal; the smooth remainder uses grid convolution.
Line third_order_coherence(const PopulationSpectrum& population, const LatticeSpec& lattice,
                           const TransitionSpec& t23, const PulseSpec& probe,
                           double k_parallel, std::optional<double> q = std::nullopt,
                           int workers = 1);

struct BandSpectrum {
  std::vector<double> omegas;
  std::vector<double> values; // NaN where the pulse floor masks the point
  std::vector<char> masked;
};

// Extinction-style band spectrum sigma(w) = 3 pi Gamma_t (hbar_c)^2 (w/w_t^3)
// Im[i sigma(w)/f(w)], reported only where |f| > floor * max|f|. The factor i
// makes the ratio the linear-response polarizability analog.
BandSpectrum band_extinction(const Line& coherence, const Line& pulse,
                             const TransitionSpec& t, double floor = 1e-3);

struct PumpProbeResult {
  Line sigma12;
  PopulationSpectrum population;
  Line sigma23;
  BandSpectrum pump_band;
  BandSpectrum probe_band;
};

// Full (1)(0) -> (2)(0) -> (2)(1) pipeline with internally consistent grids.
// half_span and domega control the coherence windows around each transition.
PumpProbeResult run_pump_probe(const LatticeSpec& lattice, const TransitionSpec& t12,
                               const TransitionSpec& t23, double p_inv0,
                               const PulseSpec& pump, const PulseSpec& probe,
                               double k_parallel, double domega = 2e-3,
                               double half_span = 0.75, double eps_reg = 1e-6,
                               int workers = 1);

} // namespace slr
