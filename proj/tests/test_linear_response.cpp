#include "doctest.h"

#include <cmath>

#include "slr/constants.hpp"
#include "slr/linear_response.hpp"

using namespace slr;

TEST_SUITE("linear_response") {

TEST_CASE("denominator pinned values") {
  const ParticleSpec p{2.0, 0.5};
  // S = 0, w = w0: purely imaginary -i Gamma0/2
  CHECK(polarizability_denominator(p, cd(0, 0), 2.0) == cd(0.0, -0.25));
  // S = 0, w = w0 - Gamma0/2: Gamma0/2 (1 - i)
  CHECK(polarizability_denominator(p, cd(0, 0), 1.75) == cd(0.25, -0.25));
  // S shifts additively
  CHECK(polarizability_denominator(p, cd(0.1, -0.02), 2.0) == cd(-0.1, -0.25 + 0.02));
}

TEST_CASE("bare particle: resonant peak 3 lambda0^2 / (2 pi), FWHM = Gamma0") {
  const double lambda0 = 500.0;
  const double w0 = 2.0 * M_PI * hbar_c / lambda0;
  const ParticleSpec p{w0, 0.5};
  const double peak = extinction_point(p, cd(0, 0), w0);
  CHECK(peak == doctest::Approx(3.0 * lambda0 * lambda0 / (2.0 * M_PI)).epsilon(1e-12));

  const auto grid = linear_grid(w0 - 1.5, w0 + 1.5, 1501);
  std::vector<double> v(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) v[i] = extinction_point(p, cd(0, 0), grid[i]);
  const PeakInfo info = peak_and_fwhm(grid, v);
  const double step = grid[1] - grid[0];
  // the w prefactor skews the line: argmax sits Gamma0^2/(4 w0) above w0
  CHECK(std::abs(info.omega - w0) <= 0.02);
  CHECK(std::abs(info.fwhm - 0.5) <= step);
}

TEST_CASE("rayleigh anomaly branches") {
  const auto [lp, lm] = rayleigh_anomaly(550.0, 0.0, 1);
  CHECK(lp == doctest::Approx(550.0));
  CHECK(lm == doctest::Approx(550.0));
  const auto [lp2, lm2] = rayleigh_anomaly(550.0, 0.3, 1);
  CHECK(lp2 == doctest::Approx(550.0 * (1.0 + std::sin(0.3))));
  CHECK(lm2 == doctest::Approx(550.0 * (1.0 - std::sin(0.3))));
  const auto [lp3, lm3] = rayleigh_anomaly(550.0, 0.0, 2);
  CHECK(lp3 == doctest::Approx(275.0));
}

TEST_CASE("spectrum values are independent of the worker count") {
  const ParticleSpec p{2.4796839679, 0.5};
  const LatticeSpec lat{550.0, 200};
  const auto grid = linear_grid(2.0, 2.5, 101);
  const auto s1 = extinction_spectrum(lat, p, 0.0, grid, 1);
  const auto s4 = extinction_spectrum(lat, p, 0.0, grid, 4);
  for (size_t i = 0; i < grid.size(); ++i) CHECK(s1.values[i] == s4.values[i]);
}

TEST_CASE("dispersion map layout is row-major in k") {
  const ParticleSpec p{2.4796839679, 0.5};
  const LatticeSpec lat{550.0, 100};
  SpectrumGrid grid;
  grid.omegas = linear_grid(2.1, 2.4, 31);
  grid.k_parallels = linear_grid(0.0, 0.004, 5);
  const auto d = dispersion_map(lat, p, grid, 2);
  REQUIRE(d.values.size() == 31 * 5);
  for (size_t ik = 0; ik < 5; ++ik) {
    const auto row = extinction_spectrum(lat, p, grid.k_parallels[ik], grid.omegas, 1);
    for (size_t iw = 0; iw < 31; ++iw) CHECK(d.values[ik * 31 + iw] == row.values[iw]);
  }
}

} // TEST_SUITE
