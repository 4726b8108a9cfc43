#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace freefall {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        Token t;
        t.offset = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            const char* begin = src.data() + i;
            const char* end = src.data() + src.size();
            double v = 0.0;
            auto res = std::from_chars(begin, end, v);
            if (res.ec != std::errc{})
                throw Error(errc::lex, "malformed number at offset " + std::to_string(i), i);
            t.kind = TokKind::number;
            t.value = v;
            i += static_cast<std::size_t>(res.ptr - begin);
            out.push_back(std::move(t));
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.kind = TokKind::ident;
            t.text = std::string(src.substr(i, j - i));
            i = j;
            out.push_back(std::move(t));
            continue;
        }
        switch (c) {
            case '+': t.kind = TokKind::plus; break;
            case '-': t.kind = TokKind::minus; break;
            case '*': t.kind = TokKind::star; break;
            case '/': t.kind = TokKind::slash; break;
            case '^': t.kind = TokKind::caret; break;
            case '(': t.kind = TokKind::lparen; break;
            case ')': t.kind = TokKind::rparen; break;
            case ',': t.kind = TokKind::comma; break;
            default:
                throw Error(errc::lex, std::string("illegal character '") + c + "' at offset " + std::to_string(i), i);
        }
        ++i;
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = TokKind::end;
    end.offset = src.size();
    out.push_back(std::move(end));
    return out;
}

const char* func_name(FuncId f) {
    switch (f) {
        case FuncId::sin: return "sin";
        case FuncId::cos: return "cos";
        case FuncId::tan: return "tan";
        case FuncId::sinh: return "sinh";
        case FuncId::cosh: return "cosh";
        case FuncId::tanh: return "tanh";
        case FuncId::exp: return "exp";
        case FuncId::log: return "log";
        case FuncId::sqrt: return "sqrt";
        case FuncId::abs: return "abs";
    }
    return "?";
}

static bool lookup_func(std::string_view name, FuncId& out) {
    static constexpr FuncId all[] = {FuncId::sin, FuncId::cos, FuncId::tan, FuncId::sinh, FuncId::cosh,
                                     FuncId::tanh, FuncId::exp, FuncId::log, FuncId::sqrt, FuncId::abs};
    for (FuncId f : all)
        if (name == func_name(f)) { out = f; return true; }
    return false;
}

ExprPtr Expr::number(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::number;
    e->value = v;
    return e;
}

ExprPtr Expr::ident(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::ident;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::pi() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::pi;
    return e;
}

ExprPtr Expr::neg(ExprPtr c) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::neg;
    e->lhs = std::move(c);
    return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr Expr::call(FuncId f, ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::call;
    e->func = f;
    e->lhs = std::move(arg);
    return e;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::number: return a.value == b.value;
        case Expr::Kind::ident: return a.name == b.name;
        case Expr::Kind::pi: return true;
        case Expr::Kind::neg: return equal(*a.lhs, *b.lhs);
        case Expr::Kind::call: return a.func == b.func && equal(*a.lhs, *b.lhs);
        default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

namespace {

class Parser {
  public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    ExprPtr run() {
        ExprPtr e = addsub();
        expect(TokKind::end, "end of input");
        return e;
    }

  private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }

    bool accept(TokKind k) {
        if (cur().kind != k) return false;
        ++pos_;
        return true;
    }

    void expect(TokKind k, const char* what) {
        if (!accept(k))
            throw Error(errc::parse, std::string("expected ") + what + " at offset " + std::to_string(cur().offset), cur().offset);
    }

    ExprPtr addsub() {
        ExprPtr e = muldiv();
        for (;;) {
            if (accept(TokKind::plus)) e = Expr::binary(Expr::Kind::add, e, muldiv());
            else if (accept(TokKind::minus)) e = Expr::binary(Expr::Kind::sub, e, muldiv());
            else return e;
        }
    }

    ExprPtr muldiv() {
        ExprPtr e = unary();
        for (;;) {
            if (accept(TokKind::star)) e = Expr::binary(Expr::Kind::mul, e, unary());
            else if (accept(TokKind::slash)) e = Expr::binary(Expr::Kind::div, e, unary());
            else return e;
        }
    }

    ExprPtr unary() {
        if (accept(TokKind::minus)) return Expr::neg(unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept(TokKind::caret)) return Expr::binary(Expr::Kind::pow, base, unary());
        return base;
    }

    ExprPtr atom() {
        const Token& t = cur();
        if (accept(TokKind::number)) return Expr::number(t.value);
        if (accept(TokKind::lparen)) {
            ExprPtr e = addsub();
            expect(TokKind::rparen, "')'");
            return e;
        }
        if (t.kind == TokKind::ident) {
            ++pos_;
            if (cur().kind == TokKind::lparen) {
                FuncId f;
                if (!lookup_func(t.text, f))
                    throw Error(errc::parse, "unknown function '" + t.text + "' at offset " + std::to_string(t.offset), t.offset);
                ++pos_;
                ExprPtr arg = addsub();
                if (cur().kind == TokKind::comma)
                    throw Error(errc::parse, "function '" + t.text + "' takes one argument (offset " + std::to_string(cur().offset) + ")", cur().offset);
                expect(TokKind::rparen, "')'");
                return Expr::call(f, arg);
            }
            if (t.text == "pi") return Expr::pi();
            return Expr::ident(t.text);
        }
        throw Error(errc::parse, "unexpected token at offset " + std::to_string(t.offset), t.offset);
    }
};

// Precedence levels used by both the parser above and the printer.
int prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

void print_rec(const Expr& e, std::string& out);

void print_child(const Expr& c, int min_prec, std::string& out) {
    if (prec(c) < min_prec) {
        out += '(';
        print_rec(c, out);
        out += ')';
    } else {
        print_rec(c, out);
    }
}

void print_rec(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::number: {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, e.value);
            out.append(buf, res.ptr);
            return;
        }
        case Expr::Kind::ident: out += e.name; return;
        case Expr::Kind::pi: out += "pi"; return;
        case Expr::Kind::neg:
            out += '-';
            print_child(*e.lhs, 3, out);
            return;
        case Expr::Kind::add:
        case Expr::Kind::sub:
            print_child(*e.lhs, 1, out);
            out += (e.kind == Expr::Kind::add ? '+' : '-');
            print_child(*e.rhs, 2, out); // right operand must bind tighter to keep left associativity
            return;
        case Expr::Kind::mul:
        case Expr::Kind::div:
            print_child(*e.lhs, 2, out);
            out += (e.kind == Expr::Kind::mul ? '*' : '/');
            print_child(*e.rhs, 3, out);
            return;
        case Expr::Kind::pow:
            print_child(*e.lhs, 5, out); // '^' is right associative and binds tightest
            out += '^';
            print_child(*e.rhs, 3, out);
            return;
        case Expr::Kind::call:
            out += func_name(e.func);
            out += '(';
            print_rec(*e.lhs, out);
            out += ')';
            return;
    }
}

} // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view source) { return parse(tokenize(source)); }

std::string print(const Expr& e) {
    std::string out;
    print_rec(e, out);
    return out;
}

namespace {

[[noreturn]] void domain_error(const Expr& e, const char* what) {
    throw Error(errc::domain, std::string(what) + " in '" + print(e) + "'");
}

} // namespace

double eval(const Expr& e, const Bindings& b) {
    double r = 0.0;
    switch (e.kind) {
        case Expr::Kind::number: return e.value;
        case Expr::Kind::pi: return std::numbers::pi;
        case Expr::Kind::ident: {
            auto it = b.find(e.name);
            if (it == b.end())
                throw Error(errc::eval, "unbound identifier '" + e.name + "'");
            return it->second;
        }
        case Expr::Kind::neg: return -eval(*e.lhs, b);
        case Expr::Kind::add: r = eval(*e.lhs, b) + eval(*e.rhs, b); break;
        case Expr::Kind::sub: r = eval(*e.lhs, b) - eval(*e.rhs, b); break;
        case Expr::Kind::mul: r = eval(*e.lhs, b) * eval(*e.rhs, b); break;
        case Expr::Kind::div: {
            double den = eval(*e.rhs, b);
            if (den == 0.0) domain_error(e, "division by zero");
            r = eval(*e.lhs, b) / den;
            break;
        }
        case Expr::Kind::pow:
            r = std::pow(eval(*e.lhs, b), eval(*e.rhs, b));
            break;
        case Expr::Kind::call: {
            double x = eval(*e.lhs, b);
            switch (e.func) {
                case FuncId::sin: r = std::sin(x); break;
                case FuncId::cos: r = std::cos(x); break;
                case FuncId::tan: r = std::tan(x); break;
                case FuncId::sinh: r = std::sinh(x); break;
                case FuncId::cosh: r = std::cosh(x); break;
                case FuncId::tanh: r = std::tanh(x); break;
                case FuncId::exp: r = std::exp(x); break;
                case FuncId::log:
                    if (x <= 0.0) domain_error(e, "log of non-positive value");
                    r = std::log(x);
                    break;
                case FuncId::sqrt:
                    if (x < 0.0) domain_error(e, "sqrt of negative value");
                    r = std::sqrt(x);
                    break;
                case FuncId::abs: r = std::fabs(x); break;
            }
            break;
        }
    }
    if (!std::isfinite(r)) domain_error(e, "non-finite result");
    return r;
}

} // namespace freefall
