#include "spin2.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <random>

namespace freefall {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEtaDiag[4] = {1.0, -1.0, -1.0, -1.0};

int perm_sign(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) {
                std::swap(p[i], p[j]);
                sign = -sign;
            }
        }
    return sign;
}

// [-1, 1) from the raw 64-bit stream; std::uniform_real_distribution is
// implementation-defined, so derive doubles directly for reproducibility.
double uniform_pm1(std::mt19937_64& eng) {
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53; // [0, 1)
    return 2.0 * u - 1.0;
}

} // namespace

const EpsilonTensor& EpsilonTensor::upper() {
    static const EpsilonTensor eps = [] {
        EpsilonTensor e{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d) e.v[a][b][c][d] = perm_sign(a, b, c, d);
        return e;
    }();
    return eps;
}

void PolarizationMode::validate() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!std::isfinite(A[i][j]))
                throw Error(errc::precondition, "polarization amplitude A must be finite");
            if (A[i][j] != A[j][i])
                throw Error(errc::precondition, "polarization amplitude A must be symmetric");
        }
    for (double v : k)
        if (!std::isfinite(v))
            throw Error(errc::precondition, "wave covector k must be finite");
}

Coupling Coupling::si() {
    const double G = 6.67430e-11, c = 299792458.0;
    return Coupling{8.0 * kPi * G / (c * c * c)};
}

Coupling Coupling::natural() { return Coupling{8.0 * kPi}; }

void Coupling::validate() const {
    if (!(std::isfinite(kappa) && kappa > 0.0))
        throw Error(errc::precondition, "coupling kappa must be positive and finite");
}

Mat4 kinetic_apply(const PolarizationMode& mode) {
    mode.validate();
    const Mat4& A = mode.A;
    const Vec4& k = mode.k;

    Vec4 ku{}; // k^a
    for (int a = 0; a < 4; ++a) ku[a] = kEtaDiag[a] * k[a];

    Mat4 Au{}; // A^{ab}
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) Au[a][b] = kEtaDiag[a] * kEtaDiag[b] * A[a][b];

    double k2 = 0.0, trA = 0.0, kAk = 0.0;
    Vec4 Aku{}; // (Ak)^a = A^{ab} k_b
    for (int a = 0; a < 4; ++a) {
        k2 += k[a] * ku[a];
        trA += kEtaDiag[a] * A[a][a];
        for (int b = 0; b < 4; ++b) {
            Aku[a] += Au[a][b] * k[b];
            kAk += k[a] * Au[a][b] * k[b];
        }
    }

    Mat4 t{};
    for (int e = 0; e < 4; ++e)
        for (int g = 0; g < 4; ++g) {
            const double eta_eg = e == g ? kEtaDiag[e] : 0.0;
            t[e][g] = k2 * Au[e][g] + kAk * eta_eg + trA * ku[e] * ku[g] -
                      trA * k2 * eta_eg - ku[e] * Aku[g] - ku[g] * Aku[e];
        }
    for (int e = 0; e < 4; ++e)
        for (int g = e + 1; g < 4; ++g) {
            const double s = 0.5 * (t[e][g] + t[g][e]);
            t[e][g] = t[g][e] = s;
        }
    return t;
}

double action_density(const PolarizationMode& mode, const Coupling& c) {
    c.validate();
    const Mat4 t = kinetic_apply(mode);
    double q = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) q += mode.A[a][b] * t[a][b];
    return q / (8.0 * c.kappa);
}

GaugeResiduals gauge_trial(const PolarizationMode& mode, const Vec4& xi, const Coupling& c) {
    mode.validate();
    c.validate();
    for (double v : xi)
        if (!std::isfinite(v))
            throw Error(errc::precondition, "gauge vector xi must be finite");

    Mat4 gauge{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) gauge[a][b] = mode.k[a] * xi[b] + xi[a] * mode.k[b];

    PolarizationMode pure{gauge, mode.k};
    PolarizationMode shifted = mode;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) shifted.A[a][b] += gauge[a][b];

    const double q_base = action_density(mode, c);
    const double q_pure = action_density(pure, c);
    const double q_shift = action_density(shifted, c);

    const double kmax = max_abs(mode.k);
    const double amax = std::max(max_abs(mode.A), max_abs(gauge));
    // Characteristic size of an individual term of the double contraction; the
    // residuals are catastrophic-cancellation leftovers measured against it.
    const double q_scale =
        std::max({std::fabs(q_base), std::fabs(q_shift),
                  24.0 * kmax * kmax * amax * amax / (8.0 * c.kappa), DBL_MIN});

    GaugeResiduals r;
    r.residual_gauge =
        std::max(std::fabs(q_pure), std::fabs(q_shift - q_base)) / q_scale;

    const Mat4 t = kinetic_apply(mode);
    double worst_div = 0.0;
    for (int g = 0; g < 4; ++g) {
        double div = 0.0;
        for (int e = 0; e < 4; ++e) div += mode.k[e] * t[e][g];
        worst_div = std::max(worst_div, std::fabs(div));
    }
    r.residual_bianchi = worst_div / std::max(kmax * max_abs(t), DBL_MIN);
    return r;
}

GaugeReport gauge_orbit_check(int trials, std::uint64_t seed, const Coupling& c,
                              double gauge_tol, double bianchi_tol) {
    if (trials < 1) throw Error(errc::precondition, "gauge_orbit_check requires trials >= 1");
    c.validate();
    if (!(std::isfinite(gauge_tol) && gauge_tol > 0.0) ||
        !(std::isfinite(bianchi_tol) && bianchi_tol > 0.0))
        throw Error(errc::precondition, "gauge tolerances must be positive and finite");

    GaugeReport report;
    report.trials = trials;
    report.rows.reserve(static_cast<std::size_t>(trials));
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 eng(trial_seed);

        PolarizationMode mode;
        Vec4 xi{};
        for (double& v : mode.k) v = uniform_pm1(eng);
        for (double& v : xi) v = uniform_pm1(eng);
        Mat4 raw{};
        for (auto& row : raw)
            for (double& v : row) v = uniform_pm1(eng);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) mode.A[a][b] = 0.5 * (raw[a][b] + raw[b][a]);

        const GaugeResiduals res = gauge_trial(mode, xi, c);
        GaugeTrialRow row;
        row.trial = i;
        row.seed = trial_seed;
        row.residual_gauge = res.residual_gauge;
        row.residual_bianchi = res.residual_bianchi;
        row.pass = res.residual_gauge <= gauge_tol && res.residual_bianchi <= bianchi_tol;

        if (row.pass) ++report.passes;
        report.worst_gauge = std::max(report.worst_gauge, res.residual_gauge);
        report.worst_bianchi = std::max(report.worst_bianchi, res.residual_bianchi);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace freefall
