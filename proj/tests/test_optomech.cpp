#include "doctest.h"

#include <cmath>

#include "slr/linear_response.hpp"
#include "slr/optomech.hpp"

using namespace slr;

TEST_SUITE("optomech") {

TEST_CASE("laser-induced width follows the cubed sideband frequency") {
  const ParticleSpec part{2.4326, 0.5};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.0;
  om.omega_laser = 2.2326;
  om.raman_ratio = 0.3;
  om.branch = SidebandBranch::RedDetuned; // sideband at 2.4326
  const double want = 0.5 * 0.09 * std::pow(2.4326 / 2.4326, 3);
  CHECK(gamma_p(om, part) == doctest::Approx(want).epsilon(1e-14));
  om.branch = SidebandBranch::BlueDetuned; // sideband at 2.0326
  const double want_b = 0.5 * 0.09 * std::pow(2.0326 / 2.4326, 3);
  CHECK(gamma_p(om, part) == doctest::Approx(want_b).epsilon(1e-14));
}

TEST_CASE("self energy matches the closed form on both branches") {
  const ParticleSpec part{2.4326, 0.5};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.013;
  om.omega_laser = 2.2326;
  om.raman_ratio = 0.25;
  const cd s_om(0.031, -0.012), s_p(0.004, -0.009);
  const cd i(0.0, 1.0);
  for (auto branch : {SidebandBranch::RedDetuned, SidebandBranch::BlueDetuned}) {
    om.branch = branch;
    const double sgn = om.sign();
    const double gp = gamma_p(om, part);
    for (double w : {2.1, 2.38, 2.4326, 2.51}) {
      const cd den = i * (om.sideband() - w) + (om.gamma_vib + sgn * gp) / 2.0 - sgn * i * s_p;
      const cd want = sgn * i * s_om * s_om / den;
      const cd got = om_self_energy(s_om, s_p, om, part, w);
      CHECK(std::abs(got - want) <= 1e-14 * std::abs(want));
    }
  }
}

TEST_CASE("self energy rejects a vanishing vibrational denominator") {
  const ParticleSpec part{2.4326, 0.5};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.0;
  om.omega_laser = 2.2326;
  om.raman_ratio = 0.0; // gamma_p = 0
  CHECK_THROWS_AS(om_self_energy(cd(0.1, 0), cd(0, 0), om, part, om.sideband()),
                  physics_error);
}

TEST_CASE("zero Raman amplitude reduces to the plain array extinction") {
  const ParticleSpec part{2.4326, 0.5};
  const LatticeSpec lat{550.0, 200};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.02;
  om.omega_laser = 2.2326;
  om.raman_ratio = 0.0;
  const auto grid = linear_grid(2.2, 2.6, 81);
  const auto with_om = om_extinction_spectrum(lat, part, om, 0.0, grid, 2);
  const auto plain = extinction_spectrum(lat, part, 0.0, grid, 2);
  for (size_t k = 0; k < grid.size(); ++k)
    CHECK(with_om.values[k] == doctest::Approx(plain.values[k]).epsilon(1e-14));
}

TEST_CASE("blue detuning near the resonance carries the RWA warning") {
  const ParticleSpec part{2.4326, 0.5};
  const LatticeSpec lat{550.0, 100};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.02;
  om.omega_laser = 2.4326;
  om.branch = SidebandBranch::BlueDetuned;
  om.raman_ratio = 0.1;
  const auto grid = linear_grid(2.2, 2.3, 11);
  const auto r = om_extinction_spectrum(lat, part, om, 0.0, grid, 1);
  CHECK(r.metadata.count("rwa_warning") == 1);
  om.branch = SidebandBranch::RedDetuned;
  const auto r2 = om_extinction_spectrum(lat, part, om, 0.0, grid, 1);
  CHECK(r2.metadata.count("rwa_warning") == 0);
}

TEST_CASE("array spectrum is identical across worker counts") {
  const ParticleSpec part{2.4326, 0.5};
  const LatticeSpec lat{550.0, 200};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.0;
  om.omega_laser = 2.2326;
  om.raman_ratio = 0.3;
  om.offset_rm = Vec3(275.0, 0.0, 0.0);
  const auto grid = linear_grid(2.35, 2.55, 101);
  const auto s1 = om_extinction_spectrum(lat, part, om, 0.0, grid, 1);
  const auto s3 = om_extinction_spectrum(lat, part, om, 0.0, grid, 3);
  for (size_t k = 0; k < grid.size(); ++k) CHECK(s1.values[k] == s3.values[k]);
}

TEST_CASE("single mode: effective width is the branch-signed sum, g = 0 is flat") {
  const ParticleSpec part{1.0, 0.1};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.01;
  om.omega_laser = 0.8;
  om.raman_ratio = 0.1;
  om.branch = SidebandBranch::RedDetuned;
  const auto grid = linear_grid(0.9, 1.1, 201);

  const auto flat = single_mode_om_spectrum(0.0, part, om, grid);
  // g = 0 removes the cavity dressing entirely; the molecular curve keeps the
  // laser-induced width, so it is the ratio of two Lorentzians
  const double gp = gamma_p(om, part);
  const double w_dress = (om.gamma_vib + gp) / 2.0, w_bare = om.gamma_vib / 2.0;
  for (size_t k = 0; k < grid.size(); ++k) {
    CHECK(flat.cavity[k] == doctest::Approx(1.0).epsilon(1e-14));
    const double x = grid[k] - 1.0;
    const double want = (w_dress / (x * x + w_dress * w_dress)) /
                        (w_bare / (x * x + w_bare * w_bare));
    CHECK(flat.molecular[k] == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(flat.effective_width == om.gamma_vib + gamma_p(om, part));

  om.branch = SidebandBranch::BlueDetuned;
  om.omega_laser = 1.2;
  const auto blue = single_mode_om_spectrum(0.0, part, om, grid);
  CHECK(blue.effective_width == om.gamma_vib - gamma_p(om, part));
}

TEST_CASE("single mode: red detuning digs a transparency dip at the sideband") {
  const ParticleSpec part{1.0, 0.1};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.01;
  om.omega_laser = 0.8;
  om.raman_ratio = 0.1;
  om.branch = SidebandBranch::RedDetuned;
  const auto grid = linear_grid(0.99, 1.01, 401);
  const auto r = single_mode_om_spectrum(0.02, part, om, grid);
  const size_t mid = 200; // omega = 1.0 = sideband
  CHECK(r.cavity[mid] < 0.95);
  // closed forms at line center: the cavity dip is 1/(1 + 2 g^2/(Gamma0 w0'))
  // against the laser-dressed width w0' = (Gamma_vib + gamma_p)/2, the
  // molecular dip is (Gamma_vib/2)/(w0' + 2 g^2/Gamma0)
  const double gp = gamma_p(om, part);
  const double width0 = (om.gamma_vib + gp) / 2.0;
  const double g = 0.02;
  const double cav_want = 1.0 / (1.0 + 2.0 * g * g / (part.gamma0_rad * width0));
  const double mol_want =
      (om.gamma_vib / 2.0) / (width0 + 2.0 * g * g / part.gamma0_rad);
  CHECK(r.cavity[mid] == doctest::Approx(cav_want).epsilon(1e-10));
  CHECK(r.molecular[mid] == doctest::Approx(mol_want).epsilon(1e-10));
  // cooling broadens the vibration: normalized molecular peak below one
  CHECK(r.molecular[mid] < 1.0);
}

TEST_CASE("single mode rejects mismatched sideband and negative coupling") {
  const ParticleSpec part{1.0, 0.1};
  OMParams om;
  om.omega_vib = 0.2;
  om.gamma_vib = 0.01;
  om.omega_laser = 0.85; // sideband 1.05 != omega0
  const auto grid = linear_grid(0.9, 1.1, 11);
  CHECK_THROWS_AS(single_mode_om_spectrum(0.02, part, om, grid), physics_error);
  om.omega_laser = 0.8;
  CHECK_THROWS_AS(single_mode_om_spectrum(-0.1, part, om, grid), physics_error);
}

} // TEST_SUITE
