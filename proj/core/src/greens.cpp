#include "slr/greens.hpp"

#include <cmath>

#include "slr/constants.hpp"

namespace slr {

double wavenumber(double omega) {
  if (omega <= 0.0) throw physics_error("wavenumber: omega must be positive");
  return omega / hbar_c;
}

ComplexDyadic greens_free_space(const Vec3& rvec, double omega) {
  const double r = rvec.norm();
  if (r <= 0.0) throw physics_error("greens_free_space: |r| = 0 (self term handled separately)");
  const double k = wavenumber(omega);

  const cd ik(0.0, k);
  const cd phase = std::exp(ik * r) / (4.0 * M_PI * k * k);
  const double r2 = r * r, r3 = r2 * r;
  const cd a = phase * (cd(k * k / r, 0.0) + ik / r2 - cd(1.0 / r3, 0.0));
  const cd b = phase * (cd(-k * k / r, 0.0) - 3.0 * ik / r2 + cd(3.0 / r3, 0.0));

  const Vec3 n = rvec / r;
  ComplexDyadic g = a * ComplexDyadic::Identity();
  g += b * (n * n.transpose()).cast<cd>();
  return g;
}

double self_term_im(double omega) {
  if (omega <= 0.0) throw physics_error("self_term_im: omega must be positive");
  return omega / (6.0 * M_PI * hbar_c);
}

} // namespace slr
