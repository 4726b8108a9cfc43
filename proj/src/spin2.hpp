#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace freefall {

// The Feynman spin-2 kinetic operator
//
//   T^{eg} = eps^{cade} eps_c{}^{bfg} k_d k_f A_ab
//
// on a real plane-wave mode h_ab(x) = A_ab cos(k.x). The substitution
// d_d d_f -> -k_d k_f produces an overall -1 that is absorbed into the
// quadratic form, so the action density per unit volume is
//
//   Q = -(1/8 kappa) A_ab (-1) T^{ab} = +(1/8 kappa) A_ab T^{ab}
//
// (the time-averaged 1/2 from cos^2 is deliberately omitted; only ratios and
// zeros of Q are ever asserted). All raising/lowering here uses the flat eta
// of the freely falling frame, never a curved g.

struct EpsilonTensor {
    // Upper-index values, eps^{0123} = +1; lowering all four with eta flips
    // the sign (det eta = -1), giving eps_{0123} = -1.
    double v[4][4][4][4];

    static const EpsilonTensor& upper();
    double operator()(int a, int b, int c, int d) const { return v[a][b][c][d]; }
};

struct PolarizationMode {
    Mat4 A{};  // symmetric amplitude A_ab (lower indices)
    Vec4 k{};  // wave covector k_a (lower index)

    void validate() const; // precondition error unless A is exactly symmetric and all finite
};

struct Coupling {
    double kappa = 1.0;

    static Coupling si();      // 8 pi G / c^3
    static Coupling natural(); // 8 pi

    void validate() const; // kappa > 0 and finite
};

// Closed-form evaluation of the double-epsilon contraction (equivalent to the
// brute-force sum over all index assignments):
//   T^{eg} = k^2 A^{eg} + (kAk) eta^{eg} + (trA) k^e k^g
//            - (trA) k^2 eta^{eg} - k^e (Ak)^g - k^g (Ak)^e.
// Output is symmetrized in (e,g).
Mat4 kinetic_apply(const PolarizationMode& mode);

double action_density(const PolarizationMode& mode, const Coupling& c);

// Residuals for one gauge-orbit probe: shift A by the pure-gauge amplitude
// G_ab = k_a xi_b + xi_a k_b and measure
//   residual_gauge   = max(|Q(G)|, |Q(A+G) - Q(A)|) / scale(Q)
//   residual_bianchi = max_g |k_e T^{eg}(A)| / (max|k| max|T|)
// both of which vanish identically in exact arithmetic.
struct GaugeResiduals {
    double residual_gauge = 0.0;
    double residual_bianchi = 0.0;
};

GaugeResiduals gauge_trial(const PolarizationMode& mode, const Vec4& xi, const Coupling& c);

struct GaugeTrialRow {
    int trial = 0;
    std::uint64_t seed = 0; // per-trial engine seed; reproduces k, xi, A
    double residual_gauge = 0.0;
    double residual_bianchi = 0.0;
    bool pass = false;
};

struct GaugeReport {
    int trials = 0;
    int passes = 0;
    double worst_gauge = 0.0;
    double worst_bianchi = 0.0;
    std::vector<GaugeTrialRow> rows;

    bool all_pass() const { return passes == trials; }
};

inline constexpr double kGaugeTol = 1e-10;
inline constexpr double kBianchiTol = 1e-12;

// Trial i seeds a fresh mt19937_64 with seed + i and draws, in order: k (4),
// xi (4), then a full 4x4 that is symmetrized into A — all components uniform
// in [-1, 1). Deterministic for a fixed seed regardless of evaluation order.
// The tolerances only grade rows as pass/fail; residuals are always reported.
GaugeReport gauge_orbit_check(int trials, std::uint64_t seed,
                              const Coupling& c = Coupling::natural(),
                              double gauge_tol = kGaugeTol, double bianchi_tol = kBianchiTol);

} // namespace freefall
