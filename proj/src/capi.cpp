#include "freefall.h"

#include <cstring>
#include <exception>
#include <string>

#include "cgamma.hpp"
#include "chirp.hpp"
#include "error.hpp"
#include "frame.hpp"
#include "metric.hpp"
#include "numformat.hpp"
#include "spin2.hpp"
#include "temperature.hpp"

using namespace freefall;

namespace {

thread_local std::string g_last_error;
thread_local size_t g_last_offset = FF_NO_OFFSET;

ff_status status_of(errc c) {
    switch (c) {
        case errc::lex: return FF_ERR_LEX;
        case errc::parse: return FF_ERR_PARSE;
        case errc::eval: return FF_ERR_EVAL;
        case errc::domain: return FF_ERR_DOMAIN;
        case errc::signature: return FF_ERR_SIGNATURE;
        case errc::singular: return FF_ERR_SINGULAR;
        case errc::range: return FF_ERR_RANGE;
        case errc::pole: return FF_ERR_POLE;
        case errc::precondition: return FF_ERR_PRECONDITION;
        case errc::convergence: return FF_ERR_CONVERGENCE;
        case errc::property: return FF_ERR_PROPERTY;
    }
    return FF_ERR_INTERNAL;
}

template <typename Fn>
ff_status wrap(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        g_last_offset = FF_NO_OFFSET;
        return FF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        g_last_offset = e.offset();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        g_last_offset = FF_NO_OFFSET;
        return FF_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        g_last_offset = FF_NO_OFFSET;
        return FF_ERR_INTERNAL;
    }
}

ff_status require(bool ok, const char* msg) {
    if (ok) return FF_OK;
    g_last_error = msg;
    g_last_offset = FF_NO_OFFSET;
    return FF_ERR_PRECONDITION;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_mat(const Mat4& m, double out[16]) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i * 4 + j] = m[i][j];
}

Mat4 read_mat(const double in[16]) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = in[i * 4 + j];
    return m;
}

void copy_ten(const Ten3& t, double out[64]) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) out[i * 16 + j * 4 + k] = t[i][j][k];
}

Vec4 read_vec(const double in[4]) { return Vec4{in[0], in[1], in[2], in[3]}; }

PhysicalConstants read_constants(const ff_constants* k) {
    if (!k) return PhysicalConstants::natural();
    return PhysicalConstants{k->hbar, k->c, k->G, k->k_B};
}

QuadratureControls read_controls(const ff_quad_controls* c) {
    if (!c) return QuadratureControls{};
    return QuadratureControls{c->split, c->series_terms, c->rel_tol, c->max_intervals, c->upper};
}

} // namespace

struct ff_metric {
    MetricSpec spec;
};

struct ff_frame {
    FrameField field;
};

extern "C" {

const char* ff_last_error(void) { return g_last_error.c_str(); }
size_t ff_last_error_offset(void) { return g_last_offset; }

const char* ff_status_name(ff_status s) {
    switch (s) {
        case FF_OK: return "ok";
        case FF_ERR_LEX: return "lex";
        case FF_ERR_PARSE: return "parse";
        case FF_ERR_EVAL: return "eval";
        case FF_ERR_DOMAIN: return "domain";
        case FF_ERR_SIGNATURE: return "signature";
        case FF_ERR_SINGULAR: return "singular";
        case FF_ERR_RANGE: return "range";
        case FF_ERR_POLE: return "pole";
        case FF_ERR_PRECONDITION: return "precondition";
        case FF_ERR_CONVERGENCE: return "convergence";
        case FF_ERR_PROPERTY: return "property";
        case FF_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void ff_string_free(char* s) { delete[] s; }

ff_status ff_metric_parse(const char* text, ff_metric** out) {
    if (ff_status s = require(text && out, "ff_metric_parse requires text and out")) return s;
    return wrap([&] { *out = new ff_metric{MetricSpec::parse(text)}; });
}

ff_status ff_metric_builtin(const char* name, ff_metric** out) {
    if (ff_status s = require(name && out, "ff_metric_builtin requires name and out")) return s;
    return wrap([&] {
        auto m = MetricSpec::builtin(name);
        if (!m) {
            std::string known;
            for (const auto& n : MetricSpec::builtin_names()) {
                if (!known.empty()) known += ", ";
                known += n;
            }
            throw Error(errc::precondition,
                        "unknown built-in metric '" + std::string(name) + "' (known: " + known + ")");
        }
        *out = new ff_metric{std::move(*m)};
    });
}

ff_status ff_metric_print(const ff_metric* m, char** out) {
    if (ff_status s = require(m && out, "ff_metric_print requires a metric and out")) return s;
    return wrap([&] { *out = dup_string(m->spec.print()); });
}

ff_status ff_metric_set_param(ff_metric* m, const char* name, double value) {
    if (ff_status s = require(m && name, "ff_metric_set_param requires a metric and name"))
        return s;
    return wrap([&] { m->spec.set_param(name, value); });
}

ff_status ff_metric_coords(const ff_metric* m, char** out) {
    if (ff_status s = require(m && out, "ff_metric_coords requires a metric and out")) return s;
    return wrap([&] {
        std::string joined;
        for (const auto& c : m->spec.coords()) {
            if (!joined.empty()) joined += ",";
            joined += c;
        }
        *out = dup_string(joined);
    });
}

void ff_metric_free(ff_metric* m) { delete m; }

ff_status ff_frame_create(const ff_metric* m, double step_scale, ff_frame** out) {
    if (ff_status s = require(m && out, "ff_frame_create requires a metric and out")) return s;
    return wrap([&] {
        *out = new ff_frame{FrameField(m->spec, step_scale > 0.0 ? step_scale : 1e-5)};
    });
}

void ff_frame_free(ff_frame* f) { delete f; }

ff_status ff_frame_metric_at(const ff_frame* f, const double x[4], double g[16]) {
    if (ff_status s = require(f && x && g, "ff_frame_metric_at requires frame, x, g")) return s;
    return wrap([&] { copy_mat(f->field.metric_at(read_vec(x)), g); });
}

ff_status ff_frame_vierbein_at(const ff_frame* f, const double x[4], double e[16],
                               double einv[16]) {
    if (ff_status s = require(f && x, "ff_frame_vierbein_at requires frame and x")) return s;
    return wrap([&] {
        FramePoint p = f->field.frame_at(read_vec(x));
        if (e) copy_mat(p.e, e);
        if (einv) copy_mat(p.einv, einv);
    });
}

ff_status ff_frame_connection_at(const ff_frame* f, const double x[4], double omega[64],
                                 double spin[64], double christoffel[64], double step[4]) {
    if (ff_status s = require(f && x, "ff_frame_connection_at requires frame and x")) return s;
    return wrap([&] {
        ConnectionBundle b = f->field.connection_at(read_vec(x));
        if (omega) copy_ten(b.omega, omega);
        if (spin) copy_ten(b.spin, spin);
        if (christoffel) copy_ten(b.christoffel, christoffel);
        if (step)
            for (int mu = 0; mu < 4; ++mu) step[mu] = b.step[mu];
    });
}

ff_status ff_frame_residual(const ff_frame* f, const double x[4], double* out) {
    if (ff_status s = require(f && x && out, "ff_frame_residual requires frame, x, out")) return s;
    return wrap([&] { *out = f->field.tetrad_postulate_residual(read_vec(x)); });
}

double ff_kappa_si(void) { return Coupling::si().kappa; }
double ff_kappa_natural(void) { return Coupling::natural().kappa; }

ff_status ff_kinetic_apply(const double A[16], const double k[4], double T[16]) {
    if (ff_status s = require(A && k && T, "ff_kinetic_apply requires A, k, T")) return s;
    return wrap([&] {
        PolarizationMode mode{read_mat(A), read_vec(k)};
        copy_mat(kinetic_apply(mode), T);
    });
}

ff_status ff_action_density(const double A[16], const double k[4], double kappa, double* out) {
    if (ff_status s = require(A && k && out, "ff_action_density requires A, k, out")) return s;
    return wrap([&] {
        PolarizationMode mode{read_mat(A), read_vec(k)};
        *out = action_density(mode, Coupling{kappa});
    });
}

ff_status ff_gauge_check(int32_t trials, uint64_t seed, double kappa, double gauge_tol,
                         double bianchi_tol, ff_gauge_row* rows, ff_gauge_summary* summary) {
    return wrap([&] {
        GaugeReport rep =
            gauge_orbit_check(trials, seed, Coupling{kappa},
                              gauge_tol > 0.0 ? gauge_tol : kGaugeTol,
                              bianchi_tol > 0.0 ? bianchi_tol : kBianchiTol);
        if (rows)
            for (int i = 0; i < rep.trials; ++i) {
                const GaugeTrialRow& r = rep.rows[static_cast<std::size_t>(i)];
                rows[i] = ff_gauge_row{r.trial, r.seed, r.residual_gauge, r.residual_bianchi,
                                       r.pass ? 1 : 0};
            }
        if (summary)
            *summary = ff_gauge_summary{rep.trials, rep.passes, rep.worst_gauge,
                                        rep.worst_bianchi};
    });
}

ff_status ff_complex_gamma(double re, double im, double* out_re, double* out_im) {
    if (ff_status s = require(out_re && out_im, "ff_complex_gamma requires out pointers"))
        return s;
    return wrap([&] {
        std::complex<double> g = complex_gamma({re, im});
        *out_re = g.real();
        *out_im = g.imag();
    });
}

ff_status ff_chirp_phase(double t, double omega, double a, double c, double* out) {
    if (ff_status s = require(out != nullptr, "ff_chirp_phase requires out")) return s;
    return wrap([&] { *out = chirp_phase(t, ChirpParams{omega, a, c}); });
}

ff_status ff_fourier_analytic(double Omega, double omega, double a, double c, double* out_re,
                              double* out_im) {
    if (ff_status s = require(out_re && out_im, "ff_fourier_analytic requires out pointers"))
        return s;
    return wrap([&] {
        std::complex<double> f = fourier_amplitude_analytic(Omega, ChirpParams{omega, a, c});
        *out_re = f.real();
        *out_im = f.imag();
    });
}

ff_quad_controls ff_quad_controls_default(void) {
    QuadratureControls d;
    return ff_quad_controls{d.split, d.series_terms, d.rel_tol, d.max_intervals, d.upper};
}

ff_status ff_fourier_numeric(double Omega, double omega, double a, double c,
                             const ff_quad_controls* ctrl, double* out_re, double* out_im) {
    if (ff_status s = require(out_re && out_im, "ff_fourier_numeric requires out pointers"))
        return s;
    return wrap([&] {
        std::complex<double> f =
            fourier_amplitude_numeric(Omega, ChirpParams{omega, a, c}, read_controls(ctrl));
        *out_re = f.real();
        *out_im = f.imag();
    });
}

ff_status ff_spectrum_sweep(double omega, double a, double c, double xmin, double xmax,
                            int32_t steps, const ff_quad_controls* ctrl, ff_spectrum_row* rows) {
    if (ff_status s = require(rows != nullptr, "ff_spectrum_sweep requires rows")) return s;
    return wrap([&] {
        auto samples =
            spectrum_sweep(ChirpParams{omega, a, c}, xmin, xmax, steps, read_controls(ctrl));
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const SpectrumSample& r = samples[i];
            rows[i] = ff_spectrum_row{r.x,      r.power_numeric, r.power_analytic, r.planck,
                                      r.rel_err_quad, r.identity_err, r.converged ? 1 : 0};
        }
    });
}

ff_constants ff_constants_si(void) {
    PhysicalConstants k = PhysicalConstants::si();
    return ff_constants{k.hbar, k.c, k.G, k.k_B};
}

ff_constants ff_constants_natural(void) {
    PhysicalConstants k = PhysicalConstants::natural();
    return ff_constants{k.hbar, k.c, k.G, k.k_B};
}

ff_status ff_unruh_temperature(double a, const ff_constants* k, double* out) {
    if (ff_status s = require(out != nullptr, "ff_unruh_temperature requires out")) return s;
    return wrap([&] { *out = unruh_temperature(a, read_constants(k)); });
}

ff_status ff_surface_gravity(double M, double R, const ff_constants* k, double* out) {
    if (ff_status s = require(out != nullptr, "ff_surface_gravity requires out")) return s;
    return wrap([&] { *out = surface_gravity(M, R, read_constants(k)); });
}

ff_status ff_schwarzschild_radius(double M, const ff_constants* k, double* out) {
    if (ff_status s = require(out != nullptr, "ff_schwarzschild_radius requires out")) return s;
    return wrap([&] { *out = schwarzschild_radius(M, read_constants(k)); });
}

ff_status ff_hawking_temperature(double M, const ff_constants* k, double* out) {
    if (ff_status s = require(out != nullptr, "ff_hawking_temperature requires out")) return s;
    return wrap([&] { *out = hawking_temperature(M, read_constants(k)); });
}

ff_status ff_temperature_profile(double M, double rmin, double rmax, int32_t steps,
                                 const ff_constants* k, ff_profile_row* rows) {
    if (ff_status s = require(rows != nullptr, "ff_temperature_profile requires rows")) return s;
    return wrap([&] {
        auto profile = temperature_profile(M, rmin, rmax, steps, read_constants(k));
        for (std::size_t i = 0; i < profile.size(); ++i) {
            const ProfileRow& r = profile[i];
            rows[i] = ff_profile_row{r.R, r.T, r.ratio_to_hawking, r.inside_horizon ? 1 : 0};
        }
    });
}

void ff_format_double(double v, char* buf, size_t buflen) {
    if (!buf || buflen == 0) return;
    const std::string s = format_double(v);
    const size_t n = s.size() < buflen - 1 ? s.size() : buflen - 1;
    std::memcpy(buf, s.c_str(), n);
    buf[n] = '\0';
}

} // extern "C"
