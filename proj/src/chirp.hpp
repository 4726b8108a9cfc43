#pragma once

#include <complex>
#include <vector>

#include "error.hpp"

namespace freefall {

// An observer with proper acceleration a sees an emitted frequency omega
// swept exponentially: the signal e^{i phi(t)} with
//
//   phi(t) = (omega c / a) e^{a t / c},  d phi / d t = omega e^{a t / c}.
//
// Its Fourier transform at Omega > 0 factorizes through Gamma(i x) with
// x = Omega c / a:
//
//   F(Omega) = (c/a) e^{-pi x / 2} Gamma(i x) e^{-i x log(omega c / a)}
//
// so |F|^2 * Omega a / (2 pi c) = 1/(e^{2 pi x} - 1), a Bose-Einstein factor.
//
// Sign trail for the numeric route: substituting u = e^{a t / c} turns the
// transform into (c/a) Int_0^inf u^{i x - 1} e^{i b u} du with b = omega c / a;
// rotating the contour to u = i y / b gives the absolutely convergent
// (c/a) e^{-pi x/2} b^{-i x} Int_0^inf y^{i x - 1} e^{-y} dy, and the remaining
// integral is evaluated as an endpoint series on (0, eps] plus adaptive
// Gauss-Kronrod quadrature on [eps, inf). The t-domain integral itself is only
// conditionally convergent, so a windowed version is provided as a diagnostic
// only (fourier_amplitude_windowed).

struct ChirpParams {
    double omega = 1.0; // emitted angular frequency, rad/s
    double a = 1.0;     // proper acceleration, m/s^2
    double c = 1.0;     // speed of light, m/s

    void validate() const; // throws errc::precondition unless all positive and finite
};

// phi(t); throws errc::range once a t / c > 700 (exp overflow).
double chirp_phase(double t, const ChirpParams& p);

std::complex<double> fourier_amplitude_analytic(double Omega, const ChirpParams& p);

struct QuadratureControls {
    double split = 0.05;      // endpoint series / quadrature split point eps
    int series_terms = 25;    // terms of sum (-1)^n eps^{n+s} / (n! (n+s))
    double rel_tol = 1e-9;    // requested relative accuracy of the integral
    int max_intervals = 2000; // adaptive subdivision budget
    double upper = 60.0;      // truncation of [eps, inf); tail < e^-upper
};

// Throws errc::precondition for Omega <= 0 (the Gamma pole at the zero mode)
// and errc::convergence when the budget is exhausted; the convergence message
// carries the achieved error estimate.
std::complex<double> fourier_amplitude_numeric(double Omega, const ChirpParams& p,
                                               const QuadratureControls& ctrl = {});

// Diagnostic only: Hann-windowed t-domain integral over [t0, t1] with n
// Simpson panels. Converges slowly and carries window bias; never used as an
// acceptance reference.
std::complex<double> fourier_amplitude_windowed(double Omega, const ChirpParams& p,
                                                double t0, double t1, int n);

struct SpectrumSample {
    double x = 0.0;              // Omega c / a
    double power_numeric = 0.0;  // |F|^2, quadrature route
    double power_analytic = 0.0; // |F|^2, Gamma closed form
    double planck = 0.0;         // 1/(e^{2 pi x} - 1)
    double rel_err_quad = 0.0;   // |numeric - analytic| / analytic
    double identity_err = 0.0;   // |power_analytic * Omega a/(2 pi c) - planck| / planck
    bool converged = true;       // false when the numeric route failed for this row
};

// Uniform grid of `steps` points on [xmin, xmax]; rows where the quadrature
// fails are flagged rather than aborting the sweep.
std::vector<SpectrumSample> spectrum_sweep(const ChirpParams& p, double xmin, double xmax, int steps,
                                           const QuadratureControls& ctrl = {});

} // namespace freefall
