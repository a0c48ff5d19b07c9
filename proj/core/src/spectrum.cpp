#include "slr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slr {

void SpectrumGrid::validate() const {
  if (omegas.empty()) throw physics_error("SpectrumGrid: empty omega axis");
  double prev = 0.0;
  for (double w : omegas) {
    if (w <= prev) throw physics_error("SpectrumGrid: omegas must be strictly increasing and positive");
    prev = w;
  }
  for (size_t i = 1; i < k_parallels.size(); ++i)
    if (k_parallels[i] <= k_parallels[i - 1])
      throw physics_error("SpectrumGrid: k_parallels must be strictly increasing");
}

PeakInfo peak_and_fwhm(const std::vector<double>& omegas, const std::vector<double>& values) {
  if (omegas.size() != values.size() || omegas.size() < 3)
    throw physics_error("peak_and_fwhm: need matching axes with >= 3 samples");
  const size_t i = std::max_element(values.begin(), values.end()) - values.begin();
  PeakInfo p{omegas[i], values[i], std::numeric_limits<double>::quiet_NaN()};

  const double half = values[i] / 2.0;
  size_t lo = i;
  while (lo > 0 && values[lo] > half) --lo;
  size_t hi = i;
  while (hi + 1 < values.size() && values[hi] > half) ++hi;
  if (values[lo] > half || values[hi] > half) return p; // crossing off-grid

  auto cross = [&](size_t a, size_t b) {
    const double t = (half - values[a]) / (values[b] - values[a]);
    return omegas[a] + t * (omegas[b] - omegas[a]);
  };
  p.fwhm = cross(hi - 1, hi) - cross(lo, lo + 1);
  return p;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (n < 2 || hi <= lo) throw physics_error("linear_grid: bad range");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

std::vector<double> piecewise_grid(double lo, double hi, const std::vector<double>& anchors,
                                   double window, double fine_step, double coarse_step) {
  if (hi <= lo) throw physics_error("piecewise_grid: bad range");
  auto near_anchor = [&](double w) {
    for (double a : anchors)
      if (std::abs(w - a) <= window) return true;
    return false;
  };
  std::vector<double> g;
  double w = lo;
  while (w < hi) {
    g.push_back(w);
    w += near_anchor(w) ? fine_step : coarse_step;
  }
  g.push_back(hi);
  g.erase(std::unique(g.begin(), g.end(),
                      [](double a, double b) { return std::abs(a - b) < 1e-12; }),
          g.end());
  return g;
}

} // namespace slr
