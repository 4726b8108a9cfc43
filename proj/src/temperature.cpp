#include "temperature.hpp"

#include <cmath>
#include <numbers>

namespace freefall {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
    if (!(std::isfinite(v) && v > 0.0))
        throw Error(errc::precondition, std::string(what) + " must be positive and finite");
}

} // namespace

PhysicalConstants PhysicalConstants::si() {
    PhysicalConstants k;
    k.hbar = 1.054571817e-34;
    k.c = 299792458.0;
    k.G = 6.67430e-11;
    k.k_B = 1.380649e-23;
    return k;
}

PhysicalConstants PhysicalConstants::natural() { return PhysicalConstants{}; }

void PhysicalConstants::validate() const {
    require_positive(hbar, "hbar");
    require_positive(c, "c");
    require_positive(G, "G");
    require_positive(k_B, "k_B");
}

double unruh_temperature(double a, const PhysicalConstants& k) {
    k.validate();
    require_positive(a, "acceleration a");
    return k.hbar * a / (2.0 * kPi * k.c * k.k_B);
}

double surface_gravity(double M, double R, const PhysicalConstants& k) {
    k.validate();
    require_positive(M, "mass M");
    require_positive(R, "radius R");
    return k.G * M / (R * R);
}

double schwarzschild_radius(double M, const PhysicalConstants& k) {
    k.validate();
    require_positive(M, "mass M");
    return 2.0 * k.G * M / (k.c * k.c);
}

double hawking_temperature(double M, const PhysicalConstants& k) {
    return unruh_temperature(surface_gravity(M, schwarzschild_radius(M, k), k), k);
}

std::vector<ProfileRow> temperature_profile(double M, double Rmin, double Rmax, int steps,
                                            const PhysicalConstants& k) {
    k.validate();
    require_positive(M, "mass M");
    require_positive(Rmin, "Rmin");
    if (!(std::isfinite(Rmax) && Rmax >= Rmin))
        throw Error(errc::precondition, "temperature profile requires 0 < Rmin <= Rmax");
    if (steps < 1) throw Error(errc::precondition, "temperature profile requires steps >= 1");
    if (steps == 1 && Rmax != Rmin)
        throw Error(errc::precondition, "steps = 1 requires Rmin == Rmax");

    const double rs = schwarzschild_radius(M, k);
    const double th = hawking_temperature(M, k);
    std::vector<ProfileRow> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        ProfileRow row;
        row.R = steps == 1 ? Rmin : Rmin + (Rmax - Rmin) * i / (steps - 1);
        row.T = unruh_temperature(surface_gravity(M, row.R, k), k);
        row.ratio_to_hawking = row.T / th;
        row.inside_horizon = row.R < rs;
        out.push_back(row);
    }
    return out;
}

} // namespace freefall
