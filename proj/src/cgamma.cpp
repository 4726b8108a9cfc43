#include "cgamma.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"

namespace freefall {

namespace {

// Lanczos g = 7, n = 9 (Godfrey's classic table).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

std::complex<double> lanczos_half_plane(std::complex<double> z) {
    // valid for Re z >= 0.5
    std::complex<double> zz = z - 1.0;
    std::complex<double> sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (zz + static_cast<double>(i));
    std::complex<double> t = zz + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, zz + 0.5) * std::exp(-t) * sum;
}

} // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw Error(errc::pole, "Gamma pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return lanczos_half_plane(z);
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    std::complex<double> s = std::sin(std::numbers::pi * z);
    return std::numbers::pi / (s * lanczos_half_plane(1.0 - z));
}

} // namespace freefall
