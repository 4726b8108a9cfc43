#pragma once

#include <vector>

#include "error.hpp"

namespace freefall {

struct PhysicalConstants {
    double hbar = 1.0; // J s
    double c = 1.0;    // m / s
    double G = 1.0;    // m^3 / (kg s^2)
    double k_B = 1.0;  // J / K

    static PhysicalConstants si();      // CODATA 2018
    static PhysicalConstants natural(); // all four equal to 1

    void validate() const;
};

// T_U = hbar a / (2 pi c k_B)
double unruh_temperature(double a, const PhysicalConstants& k);

// a = G M / R^2
double surface_gravity(double M, double R, const PhysicalConstants& k);

double schwarzschild_radius(double M, const PhysicalConstants& k); // r_S = 2 G M / c^2

// T_H = hbar c^3 / (8 pi G M k_B). Evaluated as unruh(surface_gravity(M, r_S))
// so the horizon-limit identity holds bit-for-bit, not merely to rounding.
double hawking_temperature(double M, const PhysicalConstants& k);

struct ProfileRow {
    double R = 0.0;                 // observer radius, m
    double T = 0.0;                 // T_U(R) = hbar G M / (2 pi c R^2 k_B), K
    double ratio_to_hawking = 0.0;  // T / T_H = (r_S / R)^2
    bool inside_horizon = false;    // R < r_S: computed but not visible outside
};

// Uniform R grid from Rmin to Rmax (steps >= 2; steps == 1 emits the single
// row at Rmin and then requires Rmin == Rmax).
std::vector<ProfileRow> temperature_profile(double M, double Rmin, double Rmax, int steps,
                                            const PhysicalConstants& k);

} // namespace freefall
