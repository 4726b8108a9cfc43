#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "expr.hpp"
#include "numformat.hpp"
#include "test_util.hpp"

using namespace freefall;
using test_util::code_of;

namespace {

double ev(const std::string& src, const Bindings& b = {}) { return eval(*parse(src), b); }

} // namespace

TEST_CASE("tokenizer basics") {
    auto toks = tokenize("x + 1.5e-3*sin(pi)");
    REQUIRE(toks.size() == 9); // x + 1.5e-3 * sin ( pi ) end
    CHECK(toks[0].kind == TokKind::ident);
    CHECK(toks[0].text == "x");
    CHECK(toks[2].kind == TokKind::number);
    CHECK(toks[2].value == 1.5e-3);
    CHECK(toks.back().kind == TokKind::end);
}

TEST_CASE("tokenizer reports offsets for illegal characters") {
    try {
        tokenize("1 + $");
        FAIL("expected lex error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::lex);
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("precedence and associativity") {
    CHECK(ev("1+2*3") == 7.0);
    CHECK(ev("(1+2)*3") == 9.0);
    CHECK(ev("2*3^2") == 18.0);
    CHECK(ev("2^3^2") == 512.0); // right associative
    CHECK(ev("-2^2") == -4.0);   // unary minus binds looser than ^
    CHECK(ev("2^-3") == 0.125);
    CHECK(ev("6/3/2") == 1.0);   // left associative
    CHECK(ev("1-2-3") == -4.0);
    CHECK(ev("--3") == 3.0);
}

TEST_CASE("constants and functions") {
    CHECK(ev("pi") == std::numbers::pi);
    CHECK(ev("sin(pi/2)") == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev("cos(0)") == 1.0);
    CHECK(ev("sqrt(4)") == 2.0);
    CHECK(ev("abs(-3)") == 3.0);
    CHECK(ev("exp(log(5))") == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(ev("tanh(0)") == 0.0);
}

TEST_CASE("identifier bindings") {
    Bindings b{{"r", 2.0}, {"theta", 0.5}};
    CHECK(ev("r^2", b) == 4.0);
    CHECK(ev("r*sin(theta)", b) == doctest::Approx(2.0 * std::sin(0.5)).epsilon(1e-15));
    CHECK(code_of([&] { ev("r + unbound", b); }) == errc::eval);
}

TEST_CASE("domain errors name the offending subtree") {
    CHECK(code_of([] { ev("log(-1)"); }) == errc::domain);
    CHECK(code_of([] { ev("sqrt(0-2)"); }) == errc::domain);
    CHECK(code_of([] { ev("1/0"); }) == errc::domain);
    CHECK(code_of([] { ev("0^-1"); }) == errc::domain);
    try {
        ev("1 + log(0-2)");
        FAIL("expected domain error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("log(0-2)") != std::string::npos);
    }
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse("1 +"); }) == errc::parse);
    CHECK(code_of([] { parse("sin 2"); }) == errc::parse);
    CHECK(code_of([] { parse("foo(2)"); }) == errc::parse); // unknown function
    CHECK(code_of([] { parse("1 2"); }) == errc::parse);    // trailing token
    CHECK(code_of([] { parse("()"); }) == errc::parse);
    CHECK(code_of([] { parse(""); }) == errc::parse);
    CHECK(code_of([] { parse("sin(1,2)"); }) == errc::parse); // arity
}

TEST_CASE("printer emits minimal parentheses") {
    auto round = [](const std::string& s) { return print(*parse(s)); };
    CHECK(round("1+2*3") == "1+2*3");
    CHECK(round("(1+2)*3") == "(1+2)*3");
    CHECK(round("2^3^2") == "2^3^2");
    CHECK(round("(2^3)^2") == "(2^3)^2");
    CHECK(round("-2^2") == "-2^2");
    CHECK(round("2^-3") == "2^-3");
    CHECK(round("-(1+2)") == "-(1+2)");
    CHECK(round("0-(1-2)") == "0-(1-2)");
    CHECK(round("1-2-3") == "1-2-3");
    // unary minus is itself tighter than '*', so no parens reappear here
    CHECK(round("-r^2*sin(theta)^2") == "-r^2*sin(theta)^2");
    CHECK(round("-(r^2*sin(theta)^2)") == "-(r^2*sin(theta)^2)");
}

namespace {

// Random AST with non-negative number literals (negation is always an explicit
// node, matching what the parser can produce).
ExprPtr random_expr(std::mt19937_64& eng, int depth) {
    auto uniform = [&](int n) { return static_cast<int>(eng() % static_cast<unsigned>(n)); };
    static const char* idents[] = {"x", "y", "t", "r", "theta", "phi", "rs", "a_1"};
    if (depth <= 0 || uniform(4) == 0) {
        switch (uniform(3)) {
            case 0: {
                const double mant = static_cast<double>(eng() >> 11) * 0x1.0p-53;
                const int expo = uniform(7) - 3;
                return Expr::number(mant * std::pow(10.0, expo));
            }
            case 1: return Expr::ident(idents[uniform(8)]);
            default: return Expr::pi();
        }
    }
    switch (uniform(7)) {
        case 0: return Expr::neg(random_expr(eng, depth - 1));
        case 1:
            return Expr::binary(Expr::Kind::add, random_expr(eng, depth - 1),
                                random_expr(eng, depth - 1));
        case 2:
            return Expr::binary(Expr::Kind::sub, random_expr(eng, depth - 1),
                                random_expr(eng, depth - 1));
        case 3:
            return Expr::binary(Expr::Kind::mul, random_expr(eng, depth - 1),
                                random_expr(eng, depth - 1));
        case 4:
            return Expr::binary(Expr::Kind::div, random_expr(eng, depth - 1),
                                random_expr(eng, depth - 1));
        case 5:
            return Expr::binary(Expr::Kind::pow, random_expr(eng, depth - 1),
                                random_expr(eng, depth - 1));
        default:
            return Expr::call(static_cast<FuncId>(uniform(10)), random_expr(eng, depth - 1));
    }
}

} // namespace

TEST_CASE("1000 random ASTs round-trip through print and parse") {
    std::mt19937_64 eng(20240815);
    for (int i = 0; i < 1000; ++i) {
        ExprPtr e = random_expr(eng, 5);
        const std::string text = print(*e);
        ExprPtr back = parse(text);
        if (!equal(e, back)) {
            CAPTURE(text);
            FAIL_CHECK("round-trip mismatch at case " << i);
        }
    }
}

TEST_CASE("number literals print in round-trip form") {
    CHECK(print(*parse(format_double(0.1))) == "0.1");
    CHECK(eval(*parse(format_double(1e-5)), {}) == 1e-5);
    const double v = 0x1.fffffffffffffp+2;
    CHECK(eval(*parse(format_double(v)), {}) == v);
}
