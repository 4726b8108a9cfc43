#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"

namespace freefall {

// A metric is given as text, one component expression per line:
//
//   # Schwarzschild exterior
//   coords = t,r,theta,phi
//   param rs = 1.0
//   g[0][0] = 1 - rs/r
//   g[1][1] = -1/(1 - rs/r)
//   g[2][2] = -r^2
//   g[3][3] = -r^2*sin(theta)^2
//
// Indices are 0-based positions in the coords list. Omitted components are
// zero; assignment is symmetric (g[0][1] also sets g[1][0]). '#' starts a
// comment. Only the 10 independent entries are stored.
class MetricSpec {
  public:
    static MetricSpec parse(const std::string& source);

    // Built-in names: minkowski, spherical-minkowski, schwarzschild, rindler.
    static std::optional<MetricSpec> builtin(const std::string& name);
    static std::vector<std::string> builtin_names();

    const std::array<std::string, 4>& coords() const { return coords_; }
    const std::map<std::string, double>& params() const { return params_; }

    // Throws errc::precondition if the name was not declared by a param line.
    void set_param(const std::string& name, double value);

    // nullptr means the component is identically zero.
    const ExprPtr& component(int mu, int nu) const;
    bool has_component(int mu, int nu) const { return component(mu, nu) != nullptr; }

    // Evaluates the full symmetric 4x4 at the given coordinate values.
    std::array<std::array<double, 4>, 4> eval_at(const std::array<double, 4>& x) const;

    // Canonical spec text; MetricSpec::parse(print()) reproduces this spec.
    std::string print() const;

  private:
    MetricSpec() = default;

    std::array<std::string, 4> coords_{};
    std::map<std::string, double> params_;
    std::array<ExprPtr, 10> g_{}; // packed upper triangle, mu <= nu
    static int pack(int mu, int nu);
};

} // namespace freefall
