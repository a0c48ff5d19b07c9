#pragma once

#include "slr/dyadic.hpp"

namespace slr {

// Free-space dyadic Green's tensor at displacement r [nm], frequency omega [eV].
// Units 1/nm. |r| = 0 and omega <= 0 are rejected; the regularized self term
// is exposed separately through self_term_im.
ComplexDyadic greens_free_space(const Vec3& r, double omega);

// eps . Im G(0, omega) . eps = omega/(6 pi hbar_c), independent of eps.
// The diverging real part is imposed to vanish.
double self_term_im(double omega);

} // namespace slr
