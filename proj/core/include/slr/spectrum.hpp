#pragma once

#include <map>
#include <string>
#include <vector>

#include "slr/errors.hpp"

namespace slr {

// Axes for (omega, k_parallel)-resolved results. k_parallels may be empty
// for pure spectra.
struct SpectrumGrid {
  std::vector<double> omegas;       // eV, strictly increasing, > 0
  std::vector<double> k_parallels;  // 1/nm, strictly increasing

  void validate() const;
};

// values is row-major over (k index, omega index); n_k = 1 for spectra.
struct SpectrumResult {
  SpectrumGrid grid;
  std::vector<double> values;
  std::string units;
  std::map<std::string, std::string> metadata;
};

struct PeakInfo {
  double omega;   // argmax (grid point)
  double value;
  double fwhm;    // linear interpolation of half-maximum crossings; NaN if a
                  // crossing lies outside the grid
};

// Peak and width of a sampled lineshape. Deterministic: argmax takes the
// first of equal maxima.
PeakInfo peak_and_fwhm(const std::vector<double>& omegas, const std::vector<double>& values);

// Uniform grid [lo, hi] with n points (n >= 2).
std::vector<double> linear_grid(double lo, double hi, int n);

// Piecewise grid over [lo, hi]: step fine_step within +-window of any anchor
// (Rayleigh anomaly energies), coarse_step elsewhere. Sorted, deduplicated.
std::vector<double> piecewise_grid(double lo, double hi,
                                   const std::vector<double>& anchors,
                                   double window = 0.1,
                                   double fine_step = 5e-4,
                                   double coarse_step = 5e-3);

} // namespace slr
