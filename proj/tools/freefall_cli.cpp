// freefall command-line front end. Subcommands: frames, spectrum, temps,
// gauge-check, metric print. All output is CSV (header row, LF endings)
// written to --out or standard output.
//
// Exit codes: 0 ok, 2 usage/parse, 3 domain/signature, 4 residual above
// tolerance, 5 quadrature convergence failure, 6 property (gauge) failure.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freefall.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResidual = 4;
constexpr int kExitConvergence = 5;
constexpr int kExitProperty = 6;

int exit_code_for(ff_status s) {
    switch (s) {
        case FF_OK: return kExitOk;
        case FF_ERR_LEX:
        case FF_ERR_PARSE:
        case FF_ERR_PRECONDITION: return kExitUsage;
        case FF_ERR_CONVERGENCE: return kExitConvergence;
        case FF_ERR_PROPERTY: return kExitProperty;
        default: return kExitDomain;
    }
}

int fail(ff_status s) {
    std::fprintf(stderr, "freefall: %s: %s\n", ff_status_name(s), ff_last_error());
    return exit_code_for(s);
}

int fail_usage(const std::string& msg) {
    std::fprintf(stderr, "freefall: %s\n", msg.c_str());
    return kExitUsage;
}

std::string fmt(double v) {
    char buf[32];
    ff_format_double(v, buf, sizeof buf);
    return buf;
}

bool parse_double(const std::string& text, double& out) {
    const char* first = text.c_str();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// "a,b,c,d" -> four doubles
bool parse_point(const std::string& text, double out[4]) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) return false;
    for (int i = 0; i < 4; ++i)
        if (!parse_double(parts[i], out[i])) return false;
    return true;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail_usage("cannot open output path '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) return fail_usage("failed writing output path '" + path + "'");
    return kExitOk;
}

struct MetricHandle {
    ff_metric* m = nullptr;
    ~MetricHandle() { ff_metric_free(m); }
    MetricHandle() = default;
    MetricHandle(const MetricHandle&) = delete;
    MetricHandle& operator=(const MetricHandle&) = delete;
};

struct FrameHandle {
    ff_frame* f = nullptr;
    ~FrameHandle() { ff_frame_free(f); }
    FrameHandle() = default;
    FrameHandle(const FrameHandle&) = delete;
    FrameHandle& operator=(const FrameHandle&) = delete;
};

// Built-in name first, then a spec file path.
int load_metric(const std::string& source, const std::vector<std::string>& sets,
                MetricHandle& handle) {
    ff_status s = ff_metric_builtin(source.c_str(), &handle.m);
    if (s != FF_OK) {
        std::ifstream in(source, std::ios::binary);
        if (!in)
            return fail_usage("metric '" + source +
                              "' is neither a built-in name nor a readable file");
        std::ostringstream text;
        text << in.rdbuf();
        s = ff_metric_parse(text.str().c_str(), &handle.m);
        if (s != FF_OK) return fail(s);
    }
    for (const std::string& assignment : sets) {
        const auto eq = assignment.find('=');
        double value = 0.0;
        if (eq == std::string::npos || eq == 0 ||
            !parse_double(assignment.substr(eq + 1), value))
            return fail_usage("--set expects name=value, got '" + assignment + "'");
        s = ff_metric_set_param(handle.m, assignment.substr(0, eq).c_str(), value);
        if (s != FF_OK) return fail(s);
    }
    return kExitOk;
}

void csv_row(std::string& out, const std::string& quantity, const int* i, const int* j,
             const int* k, double value) {
    out += quantity;
    out += ',';
    if (i) out += std::to_string(*i);
    out += ',';
    if (j) out += std::to_string(*j);
    out += ',';
    if (k) out += std::to_string(*k);
    out += ',';
    out += fmt(value);
    out += '\n';
}

struct FramesConfig {
    std::string metric;
    std::vector<std::string> sets;
    std::string point_text;
    double step = 1e-5;
    double tol = 1e-8;
    std::string units = "natural";
    std::string out_path;
};

int run_frames(const FramesConfig& cfg) {
    MetricHandle metric;
    if (int rc = load_metric(cfg.metric, cfg.sets, metric)) return rc;

    double x[4];
    if (!parse_point(cfg.point_text, x))
        return fail_usage("--point expects four comma-separated numbers, got '" +
                          cfg.point_text + "'");

    FrameHandle frame;
    ff_status s = ff_frame_create(metric.m, cfg.step, &frame.f);
    if (s != FF_OK) return fail(s);

    double g[16], e[16], einv[16], omega[64], spin[64], christoffel[64], step[4], residual;
    if ((s = ff_frame_metric_at(frame.f, x, g)) != FF_OK) return fail(s);
    if ((s = ff_frame_vierbein_at(frame.f, x, e, einv)) != FF_OK) return fail(s);
    if ((s = ff_frame_connection_at(frame.f, x, omega, spin, christoffel, step)) != FF_OK)
        return fail(s);
    if ((s = ff_frame_residual(frame.f, x, &residual)) != FF_OK) return fail(s);

    std::string csv = "quantity,i,j,k,value\n";
    for (int mu = 0; mu < 4; ++mu) csv_row(csv, "point", &mu, nullptr, nullptr, x[mu]);
    for (int mu = 0; mu < 4; ++mu) csv_row(csv, "step", &mu, nullptr, nullptr, step[mu]);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) csv_row(csv, "g", &mu, &nu, nullptr, g[mu * 4 + nu]);
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) csv_row(csv, "e", &a, &mu, nullptr, e[a * 4 + mu]);
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu)
            csv_row(csv, "einv", &a, &mu, nullptr, einv[a * 4 + mu]);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int lam = 0; lam < 4; ++lam)
                csv_row(csv, "omega", &mu, &nu, &lam, omega[mu * 16 + nu * 4 + lam]);
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                csv_row(csv, "spin", &mu, &a, &b, spin[mu * 16 + a * 4 + b]);
    for (int lam = 0; lam < 4; ++lam)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                csv_row(csv, "christoffel", &lam, &mu, &nu,
                        christoffel[lam * 16 + mu * 4 + nu]);
    csv_row(csv, "residual", nullptr, nullptr, nullptr, residual);

    if (int rc = write_output(cfg.out_path, csv)) return rc;
    if (residual > cfg.tol) {
        std::fprintf(stderr, "freefall: residual: tetrad-postulate residual %s exceeds --tol %s\n",
                     fmt(residual).c_str(), fmt(cfg.tol).c_str());
        return kExitResidual;
    }
    return kExitOk;
}

struct SpectrumConfig {
    double omega = 1.0;
    double a = 1.0;
    double xmin = 0.1;
    double xmax = 5.0;
    int steps = 50;
    std::string units = "natural";
    std::string out_path;
    ff_quad_controls ctrl = ff_quad_controls_default();
};

int run_spectrum(const SpectrumConfig& cfg) {
    const double c = cfg.units == "si" ? 299792458.0 : 1.0;
    std::vector<ff_spectrum_row> rows(cfg.steps > 0 ? static_cast<size_t>(cfg.steps) : 1);
    ff_status s = ff_spectrum_sweep(cfg.omega, cfg.a, c, cfg.xmin, cfg.xmax, cfg.steps,
                                    &cfg.ctrl, rows.data());
    if (s != FF_OK) return fail(s);

    std::string csv = "x,power_numeric,power_analytic,planck,rel_err_quad,identity_err\n";
    int failed = 0;
    double first_failed_x = 0.0;
    for (int i = 0; i < cfg.steps; ++i) {
        const ff_spectrum_row& r = rows[static_cast<size_t>(i)];
        csv += fmt(r.x) + ',' + fmt(r.power_numeric) + ',' + fmt(r.power_analytic) + ',' +
               fmt(r.planck) + ',' + fmt(r.rel_err_quad) + ',' + fmt(r.identity_err) + '\n';
        if (!r.converged) {
            if (failed == 0) first_failed_x = r.x;
            ++failed;
        }
    }
    if (int rc = write_output(cfg.out_path, csv)) return rc;
    if (failed > 0) {
        std::fprintf(stderr,
                     "freefall: convergence: %d of %d rows failed quadrature, first at x=%s\n",
                     failed, cfg.steps, fmt(first_failed_x).c_str());
        return kExitConvergence;
    }
    return kExitOk;
}

struct TempsConfig {
    double mass = 0.0;
    double rmin = 0.0;
    double rmax = 0.0;
    int steps = 10;
    std::string units = "si";
    std::string out_path;
};

int run_temps(const TempsConfig& cfg) {
    const ff_constants k = cfg.units == "si" ? ff_constants_si() : ff_constants_natural();
    double th = 0.0, rs = 0.0;
    ff_status s = ff_hawking_temperature(cfg.mass, &k, &th);
    if (s != FF_OK) return fail(s);
    if ((s = ff_schwarzschild_radius(cfg.mass, &k, &rs)) != FF_OK) return fail(s);

    std::vector<ff_profile_row> rows(cfg.steps > 0 ? static_cast<size_t>(cfg.steps) : 1);
    if ((s = ff_temperature_profile(cfg.mass, cfg.rmin, cfg.rmax, cfg.steps, &k,
                                    rows.data())) != FF_OK)
        return fail(s);

    std::string csv = "# T_H = " + fmt(th) + ", r_S = " + fmt(rs) + "\n";
    csv += "R_m,T_K,ratio_to_hawking,interior\n";
    for (int i = 0; i < cfg.steps; ++i) {
        const ff_profile_row& r = rows[static_cast<size_t>(i)];
        csv += fmt(r.R) + ',' + fmt(r.T) + ',' + fmt(r.ratio_to_hawking) + ',' +
               std::to_string(r.interior) + '\n';
    }
    return write_output(cfg.out_path, csv);
}

struct GaugeConfig {
    int trials = 1000;
    std::uint64_t seed = 42;
    double kappa = 0.0; // 0 = derive from units preset
    double gauge_tol = 1e-10;
    double bianchi_tol = 1e-12;
    std::string units = "natural";
    std::string out_path;
};

int run_gauge_check(const GaugeConfig& cfg) {
    const double kappa =
        cfg.kappa > 0.0 ? cfg.kappa : (cfg.units == "si" ? ff_kappa_si() : ff_kappa_natural());
    std::vector<ff_gauge_row> rows(cfg.trials > 0 ? static_cast<size_t>(cfg.trials) : 1);
    ff_gauge_summary summary{};
    ff_status s = ff_gauge_check(cfg.trials, cfg.seed, kappa, cfg.gauge_tol, cfg.bianchi_tol,
                                 rows.data(), &summary);
    if (s != FF_OK) return fail(s);

    std::string csv = "trial,seed,residual_gauge,residual_bianchi,pass\n";
    std::uint64_t first_failing_seed = 0;
    bool have_failure = false;
    for (int i = 0; i < cfg.trials; ++i) {
        const ff_gauge_row& r = rows[static_cast<size_t>(i)];
        csv += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' +
               fmt(r.residual_gauge) + ',' + fmt(r.residual_bianchi) + ',' +
               std::to_string(r.pass) + '\n';
        if (!r.pass && !have_failure) {
            have_failure = true;
            first_failing_seed = r.seed;
        }
    }
    if (int rc = write_output(cfg.out_path, csv)) return rc;
    if (summary.passes != summary.trials) {
        std::fprintf(stderr,
                     "freefall: property: %d of %d gauge trials failed; reproduce with seed %llu "
                     "(worst gauge %s, worst bianchi %s)\n",
                     summary.trials - summary.passes, summary.trials,
                     static_cast<unsigned long long>(first_failing_seed),
                     fmt(summary.worst_gauge).c_str(), fmt(summary.worst_bianchi).c_str());
        return kExitProperty;
    }
    return kExitOk;
}

struct MetricPrintConfig {
    std::string metric;
    std::vector<std::string> sets;
    std::string out_path;
};

int run_metric_print(const MetricPrintConfig& cfg) {
    MetricHandle metric;
    if (int rc = load_metric(cfg.metric, cfg.sets, metric)) return rc;
    char* text = nullptr;
    ff_status s = ff_metric_print(metric.m, &text);
    if (s != FF_OK) return fail(s);
    std::string content(text);
    ff_string_free(text);
    return write_output(cfg.out_path, content);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "freefall: local freely-falling frames, the linearized spin-2 gauge check,\n"
        "and the accelerated-observer (Doppler chirp) thermal spectrum.\n"
        "Exit codes: 0 ok, 2 usage/parse, 3 domain/signature, 4 residual,\n"
        "5 convergence, 6 property failure."};
    app.require_subcommand(1);

    FramesConfig frames_cfg;
    CLI::App* frames = app.add_subcommand(
        "frames", "Vierbein, anholonomity, spin connection, Christoffels at a point");
    frames->add_option("--metric", frames_cfg.metric, "Built-in metric name or spec file path")
        ->required();
    frames->add_option("--set", frames_cfg.sets, "Override a metric parameter, name=value");
    frames->add_option("--point", frames_cfg.point_text, "Coordinates a,b,c,d")->required();
    frames->add_option("--step", frames_cfg.step, "Finite-difference step scale (default 1e-5)");
    frames->add_option("--tol", frames_cfg.tol,
                       "Tetrad-postulate residual tolerance (default 1e-8)");
    frames->add_option("--units", frames_cfg.units, "si|natural (frames output is geometric)")
        ->check(CLI::IsMember({"si", "natural"}));
    frames->add_option("--out", frames_cfg.out_path, "Output path (default: stdout)");

    SpectrumConfig spectrum_cfg;
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Doppler-chirp |F|^2 vs the Planck factor over x");
    spectrum->add_option("--omega", spectrum_cfg.omega, "Emitted frequency (default 1)");
    spectrum->add_option("--a", spectrum_cfg.a, "Proper acceleration (default 1)");
    spectrum->add_option("--xmin", spectrum_cfg.xmin, "Lowest x = Omega c / a (default 0.1)");
    spectrum->add_option("--xmax", spectrum_cfg.xmax, "Highest x (default 5)");
    spectrum->add_option("--steps", spectrum_cfg.steps, "Grid points (default 50)");
    spectrum->add_option("--units", spectrum_cfg.units, "si|natural; sets c (default natural)")
        ->check(CLI::IsMember({"si", "natural"}));
    spectrum->add_option("--split", spectrum_cfg.ctrl.split,
                         "Series/quadrature split point (default 0.05)");
    spectrum->add_option("--series-terms", spectrum_cfg.ctrl.series_terms,
                         "Endpoint series terms (default 25)");
    spectrum->add_option("--rel-tol", spectrum_cfg.ctrl.rel_tol,
                         "Quadrature relative tolerance (default 1e-9)");
    spectrum->add_option("--max-intervals", spectrum_cfg.ctrl.max_intervals,
                         "Adaptive subdivision budget (default 2000)");
    spectrum->add_option("--upper", spectrum_cfg.ctrl.upper,
                         "Quadrature truncation point (default 60)");
    spectrum->add_option("--out", spectrum_cfg.out_path, "Output path (default: stdout)");

    TempsConfig temps_cfg;
    CLI::App* temps =
        app.add_subcommand("temps", "Unruh temperature profile T_U(R) with T_H and r_S");
    temps->add_option("--mass", temps_cfg.mass, "Source mass, kg")->required();
    temps->add_option("--rmin", temps_cfg.rmin, "Smallest radius, m")->required();
    temps->add_option("--rmax", temps_cfg.rmax, "Largest radius, m")->required();
    temps->add_option("--steps", temps_cfg.steps, "Grid points (default 10)");
    temps->add_option("--units", temps_cfg.units, "si|natural (default si)")
        ->check(CLI::IsMember({"si", "natural"}));
    temps->add_option("--out", temps_cfg.out_path, "Output path (default: stdout)");

    GaugeConfig gauge_cfg;
    CLI::App* gauge =
        app.add_subcommand("gauge-check", "Randomized gauge/Bianchi identity suite");
    gauge->add_option("--trials", gauge_cfg.trials, "Trial count (default 1000)");
    gauge->add_option("--seed", gauge_cfg.seed, "Base RNG seed (default 42)");
    gauge->add_option("--kappa", gauge_cfg.kappa, "Coupling override (default from units)");
    gauge->add_option("--gauge-tol", gauge_cfg.gauge_tol,
                      "Gauge-invariance pass tolerance (default 1e-10)");
    gauge->add_option("--bianchi-tol", gauge_cfg.bianchi_tol,
                      "Transversality pass tolerance (default 1e-12)");
    gauge->add_option("--units", gauge_cfg.units, "si|natural; sets kappa (default natural)")
        ->check(CLI::IsMember({"si", "natural"}));
    gauge->add_option("--out", gauge_cfg.out_path, "Output path (default: stdout)");

    MetricPrintConfig print_cfg;
    CLI::App* metric = app.add_subcommand("metric", "Metric-spec utilities");
    metric->require_subcommand(1);
    CLI::App* metric_print =
        metric->add_subcommand("print", "Emit the canonical spec text for a metric");
    metric_print->add_option("--metric", print_cfg.metric, "Built-in name or spec file path")
        ->required();
    metric_print->add_option("--set", print_cfg.sets, "Override a parameter, name=value");
    metric_print->add_option("--out", print_cfg.out_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*frames) return run_frames(frames_cfg);
    if (*spectrum) return run_spectrum(spectrum_cfg);
    if (*temps) return run_temps(temps_cfg);
    if (*gauge) return run_gauge_check(gauge_cfg);
    if (*metric_print) return run_metric_print(print_cfg);
    return fail_usage("no subcommand selected");
}
