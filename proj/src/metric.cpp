#include "metric.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "numformat.hpp"

namespace freefall {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw Error(errc::parse, "metric spec line " + std::to_string(lineno) + ": " + msg);
}

// Every identifier in a component expression must be a coordinate or a
// declared parameter; 'pi' parses to its own node and never reaches here.
void check_identifiers(const Expr& e, const std::set<std::string>& known, int lineno) {
    switch (e.kind) {
        case Expr::Kind::ident:
            if (!known.count(e.name))
                fail(lineno, "unknown identifier '" + e.name + "' (not a coordinate or parameter)");
            return;
        case Expr::Kind::neg:
        case Expr::Kind::call:
            check_identifiers(*e.lhs, known, lineno);
            return;
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
        case Expr::Kind::div:
        case Expr::Kind::pow:
            check_identifiers(*e.lhs, known, lineno);
            check_identifiers(*e.rhs, known, lineno);
            return;
        default:
            return;
    }
}

} // namespace

int MetricSpec::pack(int mu, int nu) {
    if (mu > nu) std::swap(mu, nu);
    static constexpr int row[4] = {0, 4, 7, 9}; // offsets of (0,*),(1,*),(2,*),(3,3)
    return row[mu] + (nu - mu);
}

MetricSpec MetricSpec::parse(const std::string& source) {
    MetricSpec spec;
    bool have_coords = false;
    std::array<bool, 10> assigned{};
    std::array<int, 10> assigned_line{};

    std::istringstream in(source);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'name = value'");
        std::string lhs = strip(line.substr(0, eq));
        std::string rhs = strip(line.substr(eq + 1));
        if (rhs.empty()) fail(lineno, "missing right-hand side");

        if (lhs == "coords") {
            if (have_coords) fail(lineno, "duplicate coords line");
            std::vector<std::string> names;
            std::size_t start = 0;
            while (true) {
                auto comma = rhs.find(',', start);
                names.push_back(strip(rhs.substr(start, comma == std::string::npos ? comma : comma - start)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (names.size() != 4)
                fail(lineno, "coords needs exactly 4 names, got " + std::to_string(names.size()));
            for (int i = 0; i < 4; ++i) {
                if (!valid_name(names[i])) fail(lineno, "invalid coordinate name '" + names[i] + "'");
                if (names[i] == "pi") fail(lineno, "'pi' is reserved");
                for (int j = 0; j < i; ++j)
                    if (names[i] == names[j]) fail(lineno, "duplicate coordinate name '" + names[i] + "'");
                spec.coords_[i] = names[i];
            }
            have_coords = true;
            continue;
        }

        if (lhs.rfind("param ", 0) == 0) {
            std::string name = strip(lhs.substr(6));
            if (!valid_name(name)) fail(lineno, "invalid parameter name '" + name + "'");
            if (name == "pi") fail(lineno, "'pi' is reserved");
            if (spec.params_.count(name)) fail(lineno, "duplicate parameter '" + name + "'");
            for (const auto& c : spec.coords_)
                if (c == name) fail(lineno, "parameter '" + name + "' collides with a coordinate");
            double v;
            try {
                v = eval(*freefall::parse(rhs), {});
            } catch (const Error& e) {
                fail(lineno, std::string("parameter value: ") + e.what());
            }
            spec.params_[name] = v;
            continue;
        }

        if (lhs.size() >= 7 && lhs[0] == 'g' && lhs[1] == '[') {
            int mu = -1, nu = -1;
            int consumed = 0;
            if (std::sscanf(lhs.c_str(), "g[%d][%d]%n", &mu, &nu, &consumed) != 2 ||
                static_cast<std::size_t>(consumed) != lhs.size())
                fail(lineno, "expected g[i][j] on the left-hand side");
            if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
                fail(lineno, "component indices must be in 0..3, got g[" + std::to_string(mu) + "][" + std::to_string(nu) + "]");
            int idx = pack(mu, nu);
            if (assigned[idx])
                fail(lineno, "duplicate assignment to g[" + std::to_string(mu) + "][" + std::to_string(nu) + "]");
            try {
                spec.g_[idx] = freefall::parse(rhs);
            } catch (const Error& e) {
                fail(lineno, e.what());
            }
            assigned[idx] = true;
            assigned_line[idx] = lineno;
            continue;
        }

        fail(lineno, "unrecognized line '" + line + "'");
    }

    if (!have_coords) throw Error(errc::parse, "metric spec: missing coords line");
    for (const auto& [name, v] : spec.params_) {
        (void)v;
        for (const auto& c : spec.coords_)
            if (c == name) throw Error(errc::parse, "metric spec: parameter '" + name + "' collides with a coordinate");
    }

    std::set<std::string> known(spec.coords_.begin(), spec.coords_.end());
    for (const auto& [name, v] : spec.params_) {
        (void)v;
        known.insert(name);
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu)
            if (spec.g_[pack(mu, nu)])
                check_identifiers(*spec.g_[pack(mu, nu)], known, assigned_line[pack(mu, nu)]);

    return spec;
}

const ExprPtr& MetricSpec::component(int mu, int nu) const { return g_[pack(mu, nu)]; }

void MetricSpec::set_param(const std::string& name, double value) {
    auto it = params_.find(name);
    if (it == params_.end())
        throw Error(errc::precondition, "unknown parameter '" + name + "'");
    it->second = value;
}

std::array<std::array<double, 4>, 4> MetricSpec::eval_at(const std::array<double, 4>& x) const {
    Bindings b;
    for (int i = 0; i < 4; ++i) b[coords_[i]] = x[i];
    for (const auto& [name, v] : params_) b[name] = v;

    std::array<std::array<double, 4>, 4> g{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            const ExprPtr& e = g_[pack(mu, nu)];
            double v = e ? eval(*e, b) : 0.0;
            g[mu][nu] = v;
            g[nu][mu] = v;
        }
    return g;
}

std::string MetricSpec::print() const {
    std::string out = "coords = ";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ',';
        out += coords_[i];
    }
    out += '\n';
    for (const auto& [name, v] : params_)
        out += "param " + name + " = " + format_double(v) + "\n";
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu)
            if (const ExprPtr& e = g_[pack(mu, nu)])
                out += "g[" + std::to_string(mu) + "][" + std::to_string(nu) + "] = " + freefall::print(*e) + "\n";
    return out;
}

std::optional<MetricSpec> MetricSpec::builtin(const std::string& name) {
    auto make = [](const char* text) { return parse(text); };
    if (name == "minkowski")
        return make("coords = t,x,y,z\n"
                    "g[0][0] = 1\n"
                    "g[1][1] = -1\n"
                    "g[2][2] = -1\n"
                    "g[3][3] = -1\n");
    if (name == "spherical-minkowski")
        return make("coords = t,r,theta,phi\n"
                    "g[0][0] = 1\n"
                    "g[1][1] = -1\n"
                    "g[2][2] = -r^2\n"
                    "g[3][3] = -r^2*sin(theta)^2\n");
    if (name == "schwarzschild")
        return make("coords = t,r,theta,phi\n"
                    "param rs = 1\n"
                    "g[0][0] = 1-rs/r\n"
                    "g[1][1] = -1/(1-rs/r)\n"
                    "g[2][2] = -r^2\n"
                    "g[3][3] = -r^2*sin(theta)^2\n");
    if (name == "rindler")
        return make("coords = t,x,y,z\n"
                    "param a = 1\n"
                    "g[0][0] = (1+a*x)^2\n"
                    "g[1][1] = -1\n"
                    "g[2][2] = -1\n"
                    "g[3][3] = -1\n");
    return std::nullopt;
}

std::vector<std::string> MetricSpec::builtin_names() {
    return {"minkowski", "spherical-minkowski", "schwarzschild", "rindler"};
}

} // namespace freefall
