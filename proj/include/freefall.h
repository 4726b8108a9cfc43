/* C interface to the freefall library.
 *
 * Conventions:
 *   - Every function returns ff_status; FF_OK (0) means success.
 *   - On failure, ff_last_error() returns a thread-local human-readable
 *     message describing the most recent failure on this thread, and
 *     ff_last_error_offset() the byte offset into the offending source text
 *     for lex/parse errors (FF_NO_OFFSET otherwise).
 *   - 4x4 matrices are row-major double[16]; rank-3 tensors are double[64]
 *     indexed [i*16 + j*4 + k] matching the C++ [i][j][k].
 *   - Strings returned through char** are heap-allocated; release them with
 *     ff_string_free.
 */
#ifndef FREEFALL_H
#define FREEFALL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
    FF_OK = 0,
    FF_ERR_LEX = 1,
    FF_ERR_PARSE = 2,
    FF_ERR_EVAL = 3,
    FF_ERR_DOMAIN = 4,
    FF_ERR_SIGNATURE = 5,
    FF_ERR_SINGULAR = 6,
    FF_ERR_RANGE = 7,
    FF_ERR_POLE = 8,
    FF_ERR_PRECONDITION = 9,
    FF_ERR_CONVERGENCE = 10,
    FF_ERR_PROPERTY = 11,
    FF_ERR_INTERNAL = 12
} ff_status;

#define FF_NO_OFFSET ((size_t)-1)

const char* ff_last_error(void);
size_t ff_last_error_offset(void);
const char* ff_status_name(ff_status s);

void ff_string_free(char* s);

/* ---- metric specs ------------------------------------------------------ */

typedef struct ff_metric ff_metric;

ff_status ff_metric_parse(const char* text, ff_metric** out);
/* Built-ins: minkowski, spherical-minkowski, schwarzschild, rindler. */
ff_status ff_metric_builtin(const char* name, ff_metric** out);
/* Canonical spec text; parsing it again reproduces the metric. */
ff_status ff_metric_print(const ff_metric* m, char** out);
ff_status ff_metric_set_param(ff_metric* m, const char* name, double value);
/* coords as "t,r,theta,phi" */
ff_status ff_metric_coords(const ff_metric* m, char** out);
void ff_metric_free(ff_metric* m);

/* ---- frames ------------------------------------------------------------ */

typedef struct ff_frame ff_frame;

/* step_scale <= 0 selects the default 1e-5. */
ff_status ff_frame_create(const ff_metric* m, double step_scale, ff_frame** out);
void ff_frame_free(ff_frame* f);

ff_status ff_frame_metric_at(const ff_frame* f, const double x[4], double g[16]);
/* e[a][mu] with eta e e = g, and its inverse e_a^mu. */
ff_status ff_frame_vierbein_at(const ff_frame* f, const double x[4], double e[16],
                               double einv[16]);
/* omega[mu][nu][lam], spin[mu][a][b], christoffel[lam][mu][nu], and the
 * per-axis finite-difference steps used. Any output pointer may be NULL. */
ff_status ff_frame_connection_at(const ff_frame* f, const double x[4], double omega[64],
                                 double spin[64], double christoffel[64], double step[4]);
/* max-abs tetrad-postulate residual at x. */
ff_status ff_frame_residual(const ff_frame* f, const double x[4], double* out);

/* ---- linearized spin-2 ------------------------------------------------- */

/* Gravitational coupling kappa: 8 pi G / c^3 (SI) or 8 pi (natural). */
double ff_kappa_si(void);
double ff_kappa_natural(void);

/* T[e][g] = eps^{cade} eps_c^{bfg} k_d k_f A_ab for symmetric A. */
ff_status ff_kinetic_apply(const double A[16], const double k[4], double T[16]);
/* Q = A_ab T^{ab} / (8 kappa). */
ff_status ff_action_density(const double A[16], const double k[4], double kappa, double* out);

typedef struct ff_gauge_row {
    int32_t trial;
    uint64_t seed; /* per-trial engine seed */
    double residual_gauge;
    double residual_bianchi;
    int32_t pass;
} ff_gauge_row;

typedef struct ff_gauge_summary {
    int32_t trials;
    int32_t passes;
    double worst_gauge;
    double worst_bianchi;
} ff_gauge_summary;

/* rows must hold `trials` entries; rows or summary may be NULL. Tolerances
 * <= 0 select the library defaults (1e-10 gauge, 1e-12 Bianchi). */
ff_status ff_gauge_check(int32_t trials, uint64_t seed, double kappa, double gauge_tol,
                         double bianchi_tol, ff_gauge_row* rows, ff_gauge_summary* summary);

/* ---- chirp spectrum and temperatures ----------------------------------- */

ff_status ff_complex_gamma(double re, double im, double* out_re, double* out_im);

/* phi(t) = (omega c / a) e^{a t / c} */
ff_status ff_chirp_phase(double t, double omega, double a, double c, double* out);

ff_status ff_fourier_analytic(double Omega, double omega, double a, double c, double* out_re,
                              double* out_im);

typedef struct ff_quad_controls {
    double split;      /* series/quadrature split point, default 0.05 */
    int32_t series_terms;  /* default 25 */
    double rel_tol;        /* default 1e-9 */
    int32_t max_intervals; /* default 2000 */
    double upper;          /* quadrature truncation, default 60 */
} ff_quad_controls;

ff_quad_controls ff_quad_controls_default(void);

/* ctrl may be NULL for defaults. */
ff_status ff_fourier_numeric(double Omega, double omega, double a, double c,
                             const ff_quad_controls* ctrl, double* out_re, double* out_im);

typedef struct ff_spectrum_row {
    double x;
    double power_numeric; /* NaN when converged == 0 */
    double power_analytic;
    double planck;
    double rel_err_quad; /* NaN when converged == 0 */
    double identity_err;
    int32_t converged;
} ff_spectrum_row;

/* rows must hold `steps` entries. Convergence failures are flagged per row,
 * not reported as an error. */
ff_status ff_spectrum_sweep(double omega, double a, double c, double xmin, double xmax,
                            int32_t steps, const ff_quad_controls* ctrl, ff_spectrum_row* rows);

typedef struct ff_constants {
    double hbar;
    double c;
    double G;
    double k_B;
} ff_constants;

ff_constants ff_constants_si(void); /* CODATA 2018 */
ff_constants ff_constants_natural(void);

ff_status ff_unruh_temperature(double a, const ff_constants* k, double* out);
ff_status ff_surface_gravity(double M, double R, const ff_constants* k, double* out);
ff_status ff_schwarzschild_radius(double M, const ff_constants* k, double* out);
ff_status ff_hawking_temperature(double M, const ff_constants* k, double* out);

typedef struct ff_profile_row {
    double R;
    double T;
    double ratio_to_hawking;
    int32_t interior; /* 1 when R < r_S */
} ff_profile_row;

/* rows must hold `steps` entries. */
ff_status ff_temperature_profile(double M, double rmin, double rmax, int32_t steps,
                                 const ff_constants* k, ff_profile_row* rows);

/* ---- formatting -------------------------------------------------------- */

/* Shortest decimal form that round-trips to the same double; buf must hold at
 * least 32 bytes. All library-adjacent file output uses this so repeated runs
 * are byte-identical. */
void ff_format_double(double v, char* buf, size_t buflen);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FREEFALL_H */
