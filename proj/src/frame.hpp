#pragma once

#include <array>

#include "linalg.hpp"
#include "metric.hpp"

namespace freefall {

// Conventions used throughout:
//   eta = diag(+1,-1,-1,-1); frame index first on the tetrad, e[alpha][mu];
//   inverse tetrad einv[alpha][mu] so that sum_mu e[a][mu]*einv[b][mu] = delta_ab.
//   Omega[mu][nu][lam] = 1/2 (einv[a][lam] d_mu e[a][nu] - (mu <-> nu))
//   spin[mu][a][b]     = e[a][nu] e[b][lam] * (raise last two of Sumu)
//     where S[mu][nu][lam] = Om[mu][nu][lam] - Om[nu][lam][mu] + Om[lam][mu][nu]
//     with all Omega indices lowered by g. No extra factor of 1/2 enters the
//     S combination; the tetrad-postulate residual fixes this normalization.
//   christoffel[lam][mu][nu] = 1/2 g^{lam rho}(d_mu g_{rho nu} + d_nu g_{rho mu} - d_rho g_{mu nu})
//
// Coordinate derivatives are central differences with per-axis step
// h_mu = step_scale * max(1, |x_mu|).

struct FramePoint {
    Mat4 g;    // g_{mu nu}
    Mat4 ginv; // g^{mu nu}
    Mat4 e;    // e^alpha{}_mu, row alpha, column mu
    Mat4 einv; // e_alpha{}^mu, row alpha, column mu
};

struct ConnectionBundle {
    Ten3 omega;       // Omega[mu][nu][lam], antisymmetric in (mu,nu) exactly
    Ten3 spin;        // spin[mu][a][b], antisymmetric in (a,b)
    Ten3 christoffel; // christoffel[lam][mu][nu], symmetric in (mu,nu) exactly
    Vec4 point;
    Vec4 step; // finite-difference steps actually used
};

class FrameField {
  public:
    explicit FrameField(MetricSpec spec, double step_scale = 1e-5);

    const MetricSpec& spec() const { return spec_; }
    double step_scale() const { return step_scale_; }
    void set_step_scale(double s);

    Mat4 metric_at(const Vec4& x) const;

    // Signature-aware triangular factorization of g: e is upper triangular in
    // (alpha <= mu) with positive diagonal and eta e e = g. For diagonal g this
    // is diag(sqrt|g_mumu|). Throws errc::signature when a pivot has the wrong
    // sign (message names the offending diagonal entries) and errc::singular
    // when |det g| < 1e-12.
    FramePoint frame_at(const Vec4& x) const;

    Ten3 anholonomity_at(const Vec4& x) const;
    Ten3 spin_connection_at(const Vec4& x) const;
    Ten3 christoffel_at(const Vec4& x) const;
    ConnectionBundle connection_at(const Vec4& x) const;

    // max_{mu,a,nu} | d_mu e^a_nu - christoffel[lam][mu][nu] e^a_lam
    //                + eta_{b c} spin[mu][a][c] e^b_nu |
    double tetrad_postulate_residual(const Vec4& x) const;

    Vec4 steps_at(const Vec4& x) const;

  private:
    MetricSpec spec_;
    double step_scale_;

    // d_mu e^a_nu for all mu, as de[mu] = 4x4 matrix [a][nu]
    std::array<Mat4, 4> tetrad_derivatives(const Vec4& x) const;
    std::array<Mat4, 4> metric_derivatives(const Vec4& x) const;
};

} // namespace freefall
