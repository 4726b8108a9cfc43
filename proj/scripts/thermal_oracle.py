#!/usr/bin/env python3
"""Independent oracle for the thermal module.

Uses mpmath at 50 digits for the Gamma/Planck values and plain CODATA-2018
arithmetic for the temperatures; prints every value frozen into the C++ test
suite (shortest-round-trip doubles in parentheses where they differ from the
50-digit value only by rounding).
"""

import mpmath as mp

mp.mp.dps = 50

HBAR = mp.mpf("1.054571817e-34")
C = mp.mpf(299792458)
G = mp.mpf("6.67430e-11")
KB = mp.mpf("1.380649e-23")


def fourier_analytic(x, omega=1, a=1, c=1):
    # F = (c/a) e^{-pi x/2} Gamma(ix) e^{-ix log(omega c/a)}
    return (
        mp.mpf(c)
        / a
        * mp.e ** (-mp.pi * x / 2)
        * mp.gamma(1j * x)
        * mp.e ** (-1j * x * mp.log(mp.mpf(omega) * c / a))
    )


def main():
    print("|Gamma(i)|^2              =", mp.nstr(abs(mp.gamma(1j)) ** 2, 20))
    print("pi/sinh(pi)               =", mp.nstr(mp.pi / mp.sinh(mp.pi), 20))
    print("Gamma(5)                  =", mp.nstr(mp.gamma(5), 20))
    print("|Gamma(0.5+14.1i)|        =", mp.nstr(abs(mp.gamma(mp.mpf("0.5") + mp.mpf("14.1") * 1j)), 20))

    f1 = fourier_analytic(1)
    print("|F(x=1)|^2                =", mp.nstr(abs(f1) ** 2, 20))
    print("2 pi/(e^{2 pi}-1)         =", mp.nstr(2 * mp.pi / (mp.e ** (2 * mp.pi) - 1), 20))
    for x in ("0.05", "1", "5", "20"):
        x = mp.mpf(x)
        lhs = abs(fourier_analytic(x)) ** 2 * x / (2 * mp.pi)
        rhs = 1 / (mp.e ** (2 * mp.pi * x) - 1)
        print(f"planck identity x={float(x):<5}: rel err =", mp.nstr(abs(lhs - rhs) / rhs, 5))

    print("T_U(a=9.81)               =", mp.nstr(HBAR * mp.mpf("9.81") / (2 * mp.pi * C * KB), 20))
    a_earth = G * mp.mpf("5.972e24") / mp.mpf("6.371e6") ** 2
    print("a_surface(earth)          =", mp.nstr(a_earth, 20))
    msun = mp.mpf("1.989e30")
    th_sun = HBAR * C**3 / (8 * mp.pi * G * msun * KB)
    print("T_H(solar mass)           =", mp.nstr(th_sun, 20))
    rs_sun = 2 * G * msun / C**2
    print("r_S(solar mass)           =", mp.nstr(rs_sun, 20))
    rsolar = mp.mpf("6.96e8")
    tu_surface = HBAR * G * msun / (2 * mp.pi * C * rsolar**2 * KB)
    print("T_U(R=solar radius)       =", mp.nstr(tu_surface, 20))
    print("  as T_H (r_S/R)^2        =", mp.nstr(th_sun * (rs_sun / rsolar) ** 2, 20))
    print("T_H natural units (M=1)   =", mp.nstr(1 / (8 * mp.pi), 20))


if __name__ == "__main__":
    main()
