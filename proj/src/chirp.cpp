#include "chirp.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cgamma.hpp"
#include "numformat.hpp"

namespace freefall {

namespace {

constexpr double kPi = std::numbers::pi;

// G7-K15 Gauss-Kronrod pair (QUADPACK nodes/weights, positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    std::complex<double> val;
    double err;    // |K15 - G7| scaled
    double resabs; // sum of |w f|, roundoff scale
};

// y^{s-1} e^{-y} for y > 0.
std::complex<double> tail_integrand(double y, std::complex<double> s) {
    return std::exp((s - 1.0) * std::log(y) - y);
}

Segment gk15(double lo, double hi, std::complex<double> s) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const std::complex<double> fc = tail_integrand(center, s);
    std::complex<double> resk = kWgk[7] * fc;
    std::complex<double> resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const std::complex<double> f1 = tail_integrand(center - dx, s);
        const std::complex<double> f2 = tail_integrand(center + dx, s);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    return {lo, hi, resk * half, std::abs(resk - resg) * half, resabs * half};
}

// gamma_lower(s, eps) = sum_{n>=0} (-1)^n eps^{n+s} / (n! (n+s)); converges in
// a few terms for eps << 1 and defines the analytic continuation to Re s = 0.
std::complex<double> endpoint_series(std::complex<double> s, double eps, int terms) {
    const std::complex<double> eps_s = std::exp(s * std::log(eps));
    std::complex<double> sum = 0.0;
    double coef = 1.0; // (-1)^n eps^n / n!
    for (int n = 0; n < terms; ++n) {
        sum += coef * eps_s / (static_cast<double>(n) + s);
        coef *= -eps / (n + 1);
    }
    return sum;
}

void check_controls(const QuadratureControls& ctrl) {
    if (!(std::isfinite(ctrl.split) && ctrl.split > 0.0))
        throw Error(errc::precondition, "quadrature split point must be positive");
    if (!(std::isfinite(ctrl.upper) && ctrl.upper > ctrl.split))
        throw Error(errc::precondition, "quadrature upper limit must exceed the split point");
    if (ctrl.series_terms < 1)
        throw Error(errc::precondition, "quadrature series_terms must be >= 1");
    if (!(std::isfinite(ctrl.rel_tol) && ctrl.rel_tol > 0.0))
        throw Error(errc::precondition, "quadrature rel_tol must be positive");
    if (ctrl.max_intervals < 1)
        throw Error(errc::precondition, "quadrature max_intervals must be >= 1");
}

double require_positive_omega(double Omega) {
    if (!(std::isfinite(Omega) && Omega > 0.0))
        throw Error(errc::precondition,
                    "Omega must be positive (Gamma pole at the divergent zero mode)");
    return Omega;
}

} // namespace

void ChirpParams::validate() const {
    if (!(std::isfinite(omega) && omega > 0.0))
        throw Error(errc::precondition, "chirp omega must be positive and finite");
    if (!(std::isfinite(a) && a > 0.0))
        throw Error(errc::precondition, "chirp acceleration a must be positive and finite");
    if (!(std::isfinite(c) && c > 0.0))
        throw Error(errc::precondition, "chirp light speed c must be positive and finite");
}

double chirp_phase(double t, const ChirpParams& p) {
    p.validate();
    if (!std::isfinite(t)) throw Error(errc::precondition, "chirp_phase requires finite t");
    const double arg = p.a * t / p.c;
    if (arg > 700.0)
        throw Error(errc::range,
                    "chirp phase overflow: a*t/c = " + format_double(arg) + " exceeds 700");
    return (p.omega * p.c / p.a) * std::exp(arg);
}

std::complex<double> fourier_amplitude_analytic(double Omega, const ChirpParams& p) {
    p.validate();
    require_positive_omega(Omega);
    const double x = Omega * p.c / p.a;
    const std::complex<double> gamma = complex_gamma({0.0, x});
    const double log_b = std::log(p.omega * p.c / p.a);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -x * log_b));
    return (p.c / p.a) * std::exp(-0.5 * kPi * x) * gamma * phase;
}

std::complex<double> fourier_amplitude_numeric(double Omega, const ChirpParams& p,
                                               const QuadratureControls& ctrl) {
    p.validate();
    require_positive_omega(Omega);
    check_controls(ctrl);

    const double x = Omega * p.c / p.a;
    const std::complex<double> s{0.0, x};

    // After u = e^{at/c} and the contour rotation u -> iy/b (b = omega c / a):
    // F = (c/a) e^{-pi x/2} b^{-ix} [ gamma_lower(s,eps) + Int_eps^inf y^{s-1}e^{-y} dy ].
    const std::complex<double> series = endpoint_series(s, ctrl.split, ctrl.series_terms);

    std::vector<Segment> segs;
    segs.push_back(gk15(ctrl.split, ctrl.upper, s));
    for (;;) {
        double total_err = 0.0, total_resabs = 0.0;
        std::complex<double> quad = 0.0;
        for (const Segment& sg : segs) {
            total_err += sg.err;
            total_resabs += sg.resabs;
            quad += sg.val;
        }
        const double scale = std::abs(series + quad);
        const double target = std::max(ctrl.rel_tol * scale, 100.0 * DBL_EPSILON * total_resabs);
        if (total_err <= target) break;
        if (static_cast<int>(segs.size()) >= ctrl.max_intervals) {
            const double achieved = scale > 0.0 ? total_err / scale : total_err;
            throw Error(errc::convergence,
                        "chirp quadrature did not converge within " +
                            std::to_string(ctrl.max_intervals) +
                            " intervals: achieved relative error estimate " +
                            format_double(achieved) + " (requested " +
                            format_double(ctrl.rel_tol) + ")");
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        const Segment split = segs[worst];
        const double mid = 0.5 * (split.lo + split.hi);
        segs[worst] = gk15(split.lo, mid, s);
        segs.push_back(gk15(mid, split.hi, s));
    }

    std::complex<double> integral = series;
    for (const Segment& sg : segs) integral += sg.val;

    const double log_b = std::log(p.omega * p.c / p.a);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -x * log_b));
    return (p.c / p.a) * std::exp(-0.5 * kPi * x) * phase * integral;
}

std::complex<double> fourier_amplitude_windowed(double Omega, const ChirpParams& p,
                                                double t0, double t1, int n) {
    p.validate();
    if (!(std::isfinite(t0) && std::isfinite(t1) && t1 > t0))
        throw Error(errc::precondition, "windowed transform requires finite t0 < t1");
    if (!std::isfinite(Omega))
        throw Error(errc::precondition, "windowed transform requires finite Omega");
    if (n < 2) throw Error(errc::precondition, "windowed transform requires n >= 2 panels");
    if (n % 2 == 1) ++n;

    const double span = t1 - t0;
    auto integrand = [&](double t) {
        const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * (t - t0) / span));
        const double arg = chirp_phase(t, p) - Omega * t;
        return w * std::exp(std::complex<double>(0.0, arg));
    };
    const double h = span / n;
    std::complex<double> acc = integrand(t0) + integrand(t1);
    for (int i = 1; i < n; ++i) acc += ((i % 2 == 1) ? 4.0 : 2.0) * integrand(t0 + i * h);
    return acc * (h / 3.0);
}

std::vector<SpectrumSample> spectrum_sweep(const ChirpParams& p, double xmin, double xmax,
                                           int steps, const QuadratureControls& ctrl) {
    p.validate();
    check_controls(ctrl);
    if (!(std::isfinite(xmin) && std::isfinite(xmax) && 0.0 < xmin && xmin < xmax))
        throw Error(errc::precondition, "spectrum sweep requires 0 < xmin < xmax");
    if (steps < 2) throw Error(errc::precondition, "spectrum sweep requires steps >= 2");

    std::vector<SpectrumSample> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        SpectrumSample row;
        row.x = xmin + (xmax - xmin) * i / (steps - 1);
        const double Omega = row.x * p.a / p.c;

        const std::complex<double> fa = fourier_amplitude_analytic(Omega, p);
        row.power_analytic = std::norm(fa);
        row.planck = 1.0 / std::expm1(2.0 * kPi * row.x);

        try {
            const std::complex<double> fn = fourier_amplitude_numeric(Omega, p, ctrl);
            row.power_numeric = std::norm(fn);
            row.rel_err_quad = row.power_analytic > 0.0
                                   ? std::abs(row.power_numeric - row.power_analytic) /
                                         row.power_analytic
                                   : std::abs(row.power_numeric);
        } catch (const Error& e) {
            if (e.code() != errc::convergence) throw;
            row.power_numeric = std::numeric_limits<double>::quiet_NaN();
            row.rel_err_quad = std::numeric_limits<double>::quiet_NaN();
            row.converged = false;
        }

        const double lhs = row.power_analytic * Omega * p.a / (2.0 * kPi * p.c);
        row.identity_err =
            row.planck > 0.0 ? std::abs(lhs - row.planck) / row.planck : std::abs(lhs);
        out.push_back(row);
    }
    return out;
}

} // namespace freefall
