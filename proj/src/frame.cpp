#include "frame.hpp"

#include <cmath>
#include <string>

namespace freefall {

namespace {

constexpr double kDetFloor = 1e-12;

Mat4 factor_tetrad(const Mat4& g) {
    // Solve eta e e = g with e upper triangular, processing the time row with
    // sign +1 and the space rows with -1 (Sylvester: pivots must come out
    // +,-,-,- for a Lorentzian metric).
    static constexpr double sign[4] = {1.0, -1.0, -1.0, -1.0};
    Mat4 e{};
    std::string bad;
    for (int mu = 0; mu < 4; ++mu) {
        double d = g[mu][mu];
        for (int a = 0; a < mu; ++a) d -= sign[a] * e[a][mu] * e[a][mu];
        double p = sign[mu] * d;
        if (p <= 0.0) {
            if (!bad.empty()) bad += ", ";
            bad += "g[" + std::to_string(mu) + "][" + std::to_string(mu) + "] pivot " + std::to_string(d);
            continue;
        }
        e[mu][mu] = std::sqrt(p);
        for (int nu = mu + 1; nu < 4; ++nu) {
            double s = g[mu][nu];
            for (int a = 0; a < mu; ++a) s -= sign[a] * e[a][mu] * e[a][nu];
            e[mu][nu] = s / (sign[mu] * e[mu][mu]);
        }
    }
    if (!bad.empty())
        throw Error(errc::signature, "metric signature is not (+,-,-,-): " + bad);
    return e;
}

} // namespace

FrameField::FrameField(MetricSpec spec, double step_scale) : spec_(std::move(spec)), step_scale_(step_scale) {
    set_step_scale(step_scale);
}

void FrameField::set_step_scale(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw Error(errc::precondition, "step scale must be positive and finite");
    step_scale_ = s;
}

Mat4 FrameField::metric_at(const Vec4& x) const { return spec_.eval_at(x); }

Vec4 FrameField::steps_at(const Vec4& x) const {
    Vec4 h;
    for (int mu = 0; mu < 4; ++mu) h[mu] = step_scale_ * std::max(1.0, std::fabs(x[mu]));
    return h;
}

FramePoint FrameField::frame_at(const Vec4& x) const {
    FramePoint fp;
    fp.g = metric_at(x);
    double det = det4(fp.g);
    if (std::fabs(det) < kDetFloor)
        throw Error(errc::singular, "metric is degenerate at this point (|det g| = " + std::to_string(std::fabs(det)) + " < 1e-12)");
    fp.e = factor_tetrad(fp.g);
    fp.einv = inverse4(fp.e);
    fp.ginv = inverse4(fp.g);
    return fp;
}

std::array<Mat4, 4> FrameField::tetrad_derivatives(const Vec4& x) const {
    Vec4 h = steps_at(x);
    std::array<Mat4, 4> de{};
    for (int mu = 0; mu < 4; ++mu) {
        Vec4 xp = x, xm = x;
        xp[mu] += h[mu];
        xm[mu] -= h[mu];
        Mat4 ep, em;
        try {
            ep = factor_tetrad(spec_.eval_at(xp));
            em = factor_tetrad(spec_.eval_at(xm));
        } catch (const Error& err) {
            throw Error(err.code(), std::string(err.what()) + " (at finite-difference stencil x[" + std::to_string(mu) + "] +/- " + std::to_string(h[mu]) + ")");
        }
        for (int a = 0; a < 4; ++a)
            for (int nu = 0; nu < 4; ++nu) de[mu][a][nu] = (ep[a][nu] - em[a][nu]) / (2.0 * h[mu]);
    }
    return de;
}

std::array<Mat4, 4> FrameField::metric_derivatives(const Vec4& x) const {
    Vec4 h = steps_at(x);
    std::array<Mat4, 4> dg{};
    for (int mu = 0; mu < 4; ++mu) {
        Vec4 xp = x, xm = x;
        xp[mu] += h[mu];
        xm[mu] -= h[mu];
        Mat4 gp, gm;
        try {
            gp = spec_.eval_at(xp);
            gm = spec_.eval_at(xm);
        } catch (const Error& err) {
            throw Error(err.code(), std::string(err.what()) + " (at finite-difference stencil x[" + std::to_string(mu) + "] +/- " + std::to_string(h[mu]) + ")");
        }
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) dg[mu][p][q] = (gp[p][q] - gm[p][q]) / (2.0 * h[mu]);
    }
    return dg;
}

namespace {

Ten3 omega_from(const FramePoint& fp, const std::array<Mat4, 4>& de) {
    Ten3 om{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int lam = 0; lam < 4; ++lam) {
                double s = 0.0;
                for (int a = 0; a < 4; ++a) s += fp.einv[a][lam] * (de[mu][a][nu] - de[nu][a][mu]);
                om[mu][nu][lam] = 0.5 * s;
                om[nu][mu][lam] = -0.5 * s;
            }
    return om;
}

Ten3 spin_from(const FramePoint& fp, const Ten3& om) {
    // Lower the last index, form S, raise the last two, convert to frame indices.
    Ten3 oml{}; // Omega_{mu nu lam}
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int lam = 0; lam < 4; ++lam) {
                double s = 0.0;
                for (int sg = 0; sg < 4; ++sg) s += om[mu][nu][sg] * fp.g[sg][lam];
                oml[mu][nu][lam] = s;
            }
    Ten3 S{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int lam = 0; lam < 4; ++lam)
                S[mu][nu][lam] = oml[mu][nu][lam] - oml[nu][lam][mu] + oml[lam][mu][nu];
    Ten3 Sup{}; // Gamma_mu{}^{nu lam}
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int lam = 0; lam < 4; ++lam) {
                double s = 0.0;
                for (int p = 0; p < 4; ++p)
                    for (int q = 0; q < 4; ++q) s += fp.ginv[nu][p] * fp.ginv[lam][q] * S[mu][p][q];
                Sup[mu][nu][lam] = s;
            }
    Ten3 spin{};
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double s = 0.0;
                for (int nu = 0; nu < 4; ++nu)
                    for (int lam = 0; lam < 4; ++lam) s += fp.e[a][nu] * fp.e[b][lam] * Sup[mu][nu][lam];
                spin[mu][a][b] = s;
            }
    return spin;
}

Ten3 christoffel_from(const FramePoint& fp, const std::array<Mat4, 4>& dg) {
    Ten3 chr{};
    for (int lam = 0; lam < 4; ++lam)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu; nu < 4; ++nu) {
                double s = 0.0;
                for (int rho = 0; rho < 4; ++rho)
                    s += fp.ginv[lam][rho] * (dg[mu][rho][nu] + dg[nu][rho][mu] - dg[rho][mu][nu]);
                chr[lam][mu][nu] = 0.5 * s;
                chr[lam][nu][mu] = 0.5 * s;
            }
    return chr;
}

} // namespace

Ten3 FrameField::anholonomity_at(const Vec4& x) const {
    FramePoint fp = frame_at(x);
    return omega_from(fp, tetrad_derivatives(x));
}

Ten3 FrameField::spin_connection_at(const Vec4& x) const {
    FramePoint fp = frame_at(x);
    return spin_from(fp, omega_from(fp, tetrad_derivatives(x)));
}

Ten3 FrameField::christoffel_at(const Vec4& x) const {
    FramePoint fp = frame_at(x);
    return christoffel_from(fp, metric_derivatives(x));
}

ConnectionBundle FrameField::connection_at(const Vec4& x) const {
    FramePoint fp = frame_at(x);
    ConnectionBundle cb;
    cb.omega = omega_from(fp, tetrad_derivatives(x));
    cb.spin = spin_from(fp, cb.omega);
    cb.christoffel = christoffel_from(fp, metric_derivatives(x));
    cb.point = x;
    cb.step = steps_at(x);
    return cb;
}

double FrameField::tetrad_postulate_residual(const Vec4& x) const {
    FramePoint fp = frame_at(x);
    std::array<Mat4, 4> de = tetrad_derivatives(x);
    Ten3 spin = spin_from(fp, omega_from(fp, de));
    Ten3 chr = christoffel_from(fp, metric_derivatives(x));
    static constexpr double eta[4] = {1.0, -1.0, -1.0, -1.0};

    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
            for (int nu = 0; nu < 4; ++nu) {
                double r = de[mu][a][nu];
                for (int lam = 0; lam < 4; ++lam) r -= chr[lam][mu][nu] * fp.e[a][lam];
                for (int b = 0; b < 4; ++b) r += eta[b] * spin[mu][a][b] * fp.e[b][nu];
                worst = std::max(worst, std::fabs(r));
            }
    return worst;
}

} // namespace freefall
