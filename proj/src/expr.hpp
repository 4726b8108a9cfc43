#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace freefall {

// Scalar expression language for metric components. Grammar, loosest first:
//
//   addsub := muldiv (('+'|'-') muldiv)*        left associative
//   muldiv := unary (('*'|'/') unary)*          left associative
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?                 right associative
//   atom   := number | ident | 'pi' | func '(' addsub ')' | '(' addsub ')'
//
// Unary minus binds looser than '^', so "-2^2" is -(2^2) = -4. Identifiers
// are case-sensitive; "pi" is reserved. Numbers are IEEE doubles.

enum class TokKind { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    TokKind kind;
    double value = 0.0;    // number
    std::string text;      // ident
    std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view source);

enum class FuncId { sin, cos, tan, sinh, cosh, tanh, exp, log, sqrt, abs };
const char* func_name(FuncId f);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, ident, pi, neg, add, sub, mul, div, pow, call };

    Kind kind;
    double value = 0.0;        // number
    std::string name;          // ident
    FuncId func = FuncId::sin; // call
    ExprPtr lhs, rhs;          // lhs only for neg/call

    static ExprPtr number(double v);
    static ExprPtr ident(std::string name);
    static ExprPtr pi();
    static ExprPtr neg(ExprPtr e);
    static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r);
    static ExprPtr call(FuncId f, ExprPtr arg);
};

bool equal(const Expr& a, const Expr& b);
inline bool equal(const ExprPtr& a, const ExprPtr& b) { return equal(*a, *b); }

ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view source);

// Minimal-parentheses form; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);
inline std::string print(const ExprPtr& e) { return print(*e); }

using Bindings = std::map<std::string, double, std::less<>>;

// Throws errc::eval for unbound identifiers and errc::domain when a
// sub-expression leaves the real domain (the message names the subtree).
double eval(const Expr& e, const Bindings& bindings);
inline double eval(const ExprPtr& e, const Bindings& b) { return eval(*e, b); }

} // namespace freefall
