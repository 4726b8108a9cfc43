#include <cmath>
#include <random>

#include "doctest.h"
#include "frame.hpp"
#include "test_util.hpp"

using namespace freefall;
using test_util::code_of;

namespace {

FrameField field(const std::string& name, double step = 1e-5) {
    auto spec = MetricSpec::builtin(name);
    REQUIRE(spec);
    return FrameField(*spec, step);
}

Mat4 transpose(const Mat4& m) {
    Mat4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
    return t;
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
    double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// One generic probe point inside the metric's safe chart region.
Vec4 safe_point(const std::string& name, std::mt19937_64& eng) {
    const double pi = 3.14159265358979323846;
    Vec4 x{uniform(eng, -1, 1), 0, 0, 0};
    if (name == "minkowski") {
        for (int i = 1; i < 4; ++i) x[i] = uniform(eng, -3, 3);
    } else if (name == "rindler") {
        x[1] = uniform(eng, -0.5, 5);
        x[2] = uniform(eng, -3, 3);
        x[3] = uniform(eng, -3, 3);
    } else if (name == "spherical-minkowski") {
        x[1] = uniform(eng, 0.5, 10);
        x[2] = uniform(eng, 0.3, pi - 0.3);
        x[3] = uniform(eng, 0, 2 * pi);
    } else { // schwarzschild
        x[1] = uniform(eng, 2.2, 10);
        x[2] = uniform(eng, 0.3, pi - 0.3);
        x[3] = uniform(eng, 0, 2 * pi);
    }
    return x;
}

} // namespace

TEST_CASE("minkowski frame is the identity with zero residual") {
    FrameField f = field("minkowski");
    FramePoint fp = f.frame_at({0.2, 1.0, -2.0, 3.0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(fp.e[i][j] == (i == j ? 1.0 : 0.0));
    CHECK(f.tetrad_postulate_residual({0.2, 1.0, -2.0, 3.0}) <= 1e-14);
}

TEST_CASE("schwarzschild connection at r=2, theta=pi/2 matches the symbolic oracle") {
    // Frozen from scripts/connection_oracle.py (rs = 1).
    FrameField f = field("schwarzschild");
    const Vec4 x{0, 2, 1.5707963267948966, 0};

    FramePoint fp = f.frame_at(x);
    CHECK(test_util::rel_err(fp.e[0][0], 0.7071067811865476) <= 1e-12);
    CHECK(test_util::rel_err(fp.e[1][1], 1.4142135623730951) <= 1e-12);
    CHECK(test_util::rel_err(fp.e[2][2], 2.0) <= 1e-12);
    CHECK(test_util::rel_err(fp.e[3][3], 2.0) <= 1e-12);

    ConnectionBundle cb = f.connection_at(x);
    CHECK(cb.omega[1][0][0] == doctest::Approx(0.125).epsilon(1e-6));
    CHECK(cb.omega[0][1][0] == doctest::Approx(-0.125).epsilon(1e-6));
    CHECK(cb.spin[0][0][1] == doctest::Approx(-0.125).epsilon(1e-6));
    CHECK(cb.christoffel[1][0][0] == doctest::Approx(0.0625).epsilon(1e-6));
    CHECK(cb.christoffel[0][0][1] == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(cb.christoffel[1][2][2] == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("schwarzschild connection at a generic point matches the symbolic oracle") {
    FrameField f = field("schwarzschild");
    const Vec4 x{0, 3, 1.0472, 0.5};

    FramePoint fp = f.frame_at(x);
    CHECK(test_util::rel_err(fp.e[3][3], 2.5980798845506293) <= 1e-12);

    ConnectionBundle cb = f.connection_at(x);
    CHECK(cb.omega[1][0][0] == doctest::Approx(1.0 / 24).epsilon(1e-6));
    CHECK(cb.spin[0][0][1] == doctest::Approx(-1.0 / 18).epsilon(1e-6));
    CHECK(cb.christoffel[1][0][0] == doctest::Approx(1.0 / 27).epsilon(1e-6));
    CHECK(cb.christoffel[0][0][1] == doctest::Approx(1.0 / 12).epsilon(1e-6));
    CHECK(cb.christoffel[1][2][2] == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("rindler connection matches the symbolic oracle") {
    FrameField f = field("rindler");

    FramePoint fp = f.frame_at({0, 3, 0, 0});
    CHECK(fp.e[0][0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(fp.e[1][1] == doctest::Approx(1.0).epsilon(1e-12));

    ConnectionBundle cb = f.connection_at({0, 3, 0, 0});
    CHECK(cb.omega[1][0][0] == doctest::Approx(0.125).epsilon(1e-6));
    CHECK(cb.spin[0][0][1] == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(cb.christoffel[1][0][0] == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(cb.christoffel[0][0][1] == doctest::Approx(0.25).epsilon(1e-6));

    cb = f.connection_at({0, 0.5, 0, 0});
    CHECK(f.frame_at({0, 0.5, 0, 0}).e[0][0] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(cb.omega[1][0][0] == doctest::Approx(1.0 / 3).epsilon(1e-6));
    CHECK(cb.spin[0][0][1] == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(cb.christoffel[1][0][0] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(cb.christoffel[0][0][1] == doctest::Approx(2.0 / 3).epsilon(1e-6));
}

TEST_CASE("spherical-minkowski vierbein matches the symbolic oracle") {
    FrameField f = field("spherical-minkowski");
    FramePoint fp = f.frame_at({0, 2, 1, 0.3});
    CHECK(test_util::rel_err(fp.e[2][2], 2.0) <= 1e-12);
    CHECK(test_util::rel_err(fp.e[3][3], 1.682941969615793) <= 1e-12);
}

TEST_CASE("frame identities hold at random points of every builtin") {
    std::mt19937_64 eng(20240816u);
    const Mat4 eta = minkowski_eta();
    for (const auto& name : MetricSpec::builtin_names()) {
        FrameField f = field(name);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec4 x = safe_point(name, eng);
            CAPTURE(name);
            CAPTURE(trial);

            FramePoint fp = f.frame_at(x);
            const double gscale = std::max(1.0, max_abs(fp.g));

            // eta_ab e^a_mu e^b_nu = g_mu_nu
            Mat4 recon = matmul(transpose(fp.e), matmul(eta, fp.e));
            double worst = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    worst = std::max(worst, std::fabs(recon[i][j] - fp.g[i][j]));
            CHECK(worst <= 1e-12 * gscale);

            // sum_mu e[a][mu] einv[b][mu] = delta_ab
            Mat4 id = matmul(fp.e, transpose(fp.einv));
            worst = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    worst = std::max(worst, std::fabs(id[i][j] - (i == j ? 1.0 : 0.0)));
            CHECK(worst <= 1e-12);

            ConnectionBundle cb = f.connection_at(x);
            // exact antisymmetry / symmetry by construction
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = 0; c < 4; ++c) {
                        CHECK(cb.omega[a][b][c] == -cb.omega[b][a][c]);
                        CHECK(cb.christoffel[a][b][c] == cb.christoffel[a][c][b]);
                    }
            const double sscale = std::max(1.0, max_abs(cb.spin));
            for (int m = 0; m < 4; ++m)
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b)
                        CHECK(std::fabs(cb.spin[m][a][b] + cb.spin[m][b][a]) <= 1e-12 * sscale);

            CHECK(f.tetrad_postulate_residual(x) <= 1e-6);
        }
    }
}

TEST_CASE("tetrad-postulate residual shrinks ~4x when the step halves") {
    // Only meaningful for curved metrics; flat ones are exact at any step.
    struct Probe {
        const char* name;
        Vec4 x;
    };
    const Probe probes[] = {
        {"schwarzschild", {0, 3, 1.2, 0.4}},
        {"spherical-minkowski", {0, 2, 1, 0.3}},
    };
    for (const auto& p : probes) {
        CAPTURE(p.name);
        double coarse = field(p.name, 1e-3).tetrad_postulate_residual(p.x);
        double fine = field(p.name, 5e-4).tetrad_postulate_residual(p.x);
        REQUIRE(fine > 0.0);
        double ratio = coarse / fine;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
}

TEST_CASE("signature violation inside the horizon is reported") {
    FrameField f = field("schwarzschild");
    const Vec4 inside{0, 0.5, 1.5707963267948966, 0};
    CHECK(code_of([&] { f.frame_at(inside); }) == errc::signature);
    CHECK(code_of([&] { f.connection_at(inside); }) == errc::signature);
    CHECK(code_of([&] { f.tetrad_postulate_residual(inside); }) == errc::signature);
}

TEST_CASE("degenerate metric is reported as singular") {
    MetricSpec m = MetricSpec::parse(
        "coords = t,x,y,z\n"
        "g[0][0] = 1\n"
        "g[1][1] = -1\n"
        "g[2][2] = -1\n"); // g[3][3] omitted -> zero row
    FrameField f(m);
    CHECK(code_of([&] { f.frame_at({0, 0, 0, 0}); }) == errc::singular);
}

TEST_CASE("evaluation errors propagate from the metric expressions") {
    MetricSpec m = MetricSpec::parse(
        "coords = t,x,y,z\n"
        "g[0][0] = sqrt(x)\n"
        "g[1][1] = -1\n"
        "g[2][2] = -1\n"
        "g[3][3] = -1\n");
    FrameField f(m);
    CHECK(code_of([&] { f.metric_at({0, -1, 0, 0}); }) == errc::domain);
}

TEST_CASE("step scale must be positive") {
    auto spec = MetricSpec::builtin("minkowski");
    REQUIRE(spec);
    CHECK(code_of([&] { FrameField bad(*spec, 0.0); }) == errc::precondition);
    CHECK(code_of([&] { FrameField bad(*spec, -1e-5); }) == errc::precondition);
    FrameField f(*spec);
    CHECK(code_of([&] { f.set_step_scale(0.0); }) == errc::precondition);
}

TEST_CASE("steps scale with the coordinate magnitude") {
    FrameField f = field("minkowski", 1e-5);
    Vec4 s = f.steps_at({0, 2, 0.5, -8});
    CHECK(s[0] == 1e-5);
    CHECK(s[1] == 2e-5);
    CHECK(s[2] == 1e-5);
    CHECK(s[3] == 8e-5);
}
