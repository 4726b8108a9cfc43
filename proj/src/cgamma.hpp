#pragma once

#include <complex>

namespace freefall {

// Gamma(z) for complex z via a Lanczos series (g = 7, 9 terms), with the
// reflection formula for Re z < 1/2. Relative accuracy is ~2e-13 for
// |Im z| <= 50, which is what the spectrum identities need. The coefficients
// are hard-coded so the library has no special-function dependency.
// Throws errc::pole when z is a non-positive real integer.
std::complex<double> complex_gamma(std::complex<double> z);

} // namespace freefall
