#include <cmath>
#include <string>

#include "doctest.h"
#include "metric.hpp"
#include "test_util.hpp"

using namespace freefall;
using test_util::code_of;

TEST_CASE("builtin metrics evaluate correctly") {
    auto mink = MetricSpec::builtin("minkowski");
    REQUIRE(mink);
    auto g = mink->eval_at({0, 1, 2, 3});
    CHECK(g[0][0] == 1.0);
    CHECK(g[1][1] == -1.0);
    CHECK(g[0][1] == 0.0);

    auto schw = MetricSpec::builtin("schwarzschild");
    REQUIRE(schw);
    g = schw->eval_at({0, 2, 1.5707963267948966, 0});
    CHECK(g[0][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g[1][1] == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(g[2][2] == -4.0);
    CHECK(g[3][3] == doctest::Approx(-4.0).epsilon(1e-15));

    auto rind = MetricSpec::builtin("rindler");
    REQUIRE(rind);
    g = rind->eval_at({0, 3, 0, 0});
    CHECK(g[0][0] == 16.0);

    CHECK(!MetricSpec::builtin("kerr"));
    CHECK(MetricSpec::builtin_names().size() == 4);
}

TEST_CASE("parameters can be overridden") {
    auto schw = MetricSpec::builtin("schwarzschild");
    REQUIRE(schw);
    schw->set_param("rs", 2.0);
    auto g = schw->eval_at({0, 4, 1.5707963267948966, 0});
    CHECK(g[0][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(code_of([&] { schw->set_param("mass", 1.0); }) == errc::precondition);
}

TEST_CASE("spec text parses with comments, blanks, and symmetric assignment") {
    MetricSpec m = MetricSpec::parse(
        "# a 2d-wave style example\n"
        "coords = u, v, y, z\n"
        "\n"
        "param amp = 0.25  # parameter comment\n"
        "g[0][1] = 1 + amp\n"
        "g[2][2] = -1\n"
        "g[3][3] = -1\n");
    auto g = m.eval_at({0, 0, 0, 0});
    CHECK(g[0][1] == 1.25);
    CHECK(g[1][0] == 1.25);
    CHECK(g[0][0] == 0.0);
    CHECK(m.has_component(1, 0));
    CHECK(!m.has_component(0, 0));
}

TEST_CASE("parse failures carry the line number") {
    auto msg_of = [](const std::string& text) -> std::string {
        try {
            MetricSpec::parse(text);
        } catch (const Error& e) {
            return e.what();
        }
        return "";
    };

    CHECK(code_of([] { MetricSpec::parse("g[0][0] = 1\n"); }) == errc::parse); // no coords
    CHECK(msg_of("coords = t,x,y\n").find("line 1") != std::string::npos);
    CHECK(msg_of("coords = t,x,y,x\n").find("duplicate coordinate") != std::string::npos);
    CHECK(msg_of("coords = t,x,y,pi\n").find("reserved") != std::string::npos);
    CHECK(msg_of("coords = t,x,y,z\ng[0][4] = 1\n").find("0..3") != std::string::npos);
    CHECK(msg_of("coords = t,x,y,z\ng[0][0] = 1\ng[0][0] = 2\n").find("duplicate") !=
          std::string::npos);
    // symmetric duplicate: g[1][0] aliases g[0][1]
    CHECK(msg_of("coords = t,x,y,z\ng[0][1] = 1\ng[1][0] = 2\n").find("duplicate") !=
          std::string::npos);
    CHECK(msg_of("coords = t,x,y,z\ng[0][0] = q\n").find("unknown identifier 'q'") !=
          std::string::npos);
    CHECK(msg_of("coords = t,x,y,z\nparam t = 1\n").find("collides") != std::string::npos);
    CHECK(msg_of("coords = t,x,y,z\nbogus line\n").find("line 2") != std::string::npos);
    CHECK(msg_of("coords = t,x,y,z\ng[0][0] = 1 +\n").find("line 2") != std::string::npos);
}

TEST_CASE("print round-trips every builtin") {
    for (const auto& name : MetricSpec::builtin_names()) {
        auto m = MetricSpec::builtin(name);
        REQUIRE(m);
        const std::string text = m->print();
        MetricSpec back = MetricSpec::parse(text);
        CHECK(back.print() == text);
        // identical values at a generic probe point
        const std::array<double, 4> x{0.3, 2.7, 1.1, 0.8};
        auto ga = m->eval_at(x);
        auto gb = back.eval_at(x);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(ga[i][j] == gb[i][j]);
    }
}

TEST_CASE("print reflects overridden parameters") {
    auto schw = MetricSpec::builtin("schwarzschild");
    REQUIRE(schw);
    schw->set_param("rs", 3.5);
    CHECK(schw->print().find("param rs = 3.5") != std::string::npos);
}
