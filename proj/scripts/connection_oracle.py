#!/usr/bin/env python3
"""Symbolic oracle for the frame/connection pipeline.

Builds the four built-in metrics in sympy, forms the vierbein, the objects of
anholonomity, the spin connection and the Christoffel symbols by exact
differentiation, checks the tetrad postulate numerically at probe points, and
prints the component values frozen into the C++ test suite.

Conventions (must match src/frame.hpp):
  eta = diag(+1,-1,-1,-1)
  Omega[mu][nu][lam] = 1/2 (e_a^lam d_mu e^a_nu - (mu <-> nu))
  S[mu][nu][lam] = Om[mu][nu][lam] - Om[nu][lam][mu] + Om[lam][mu][nu]
      (all indices lowered with g; no extra factor of 1/2)
  spin[mu][a][b] = e^a_nu e^b_lam (S with last two indices raised by g^-1)
  christoffel[lam][mu][nu] = 1/2 g^{lam rho}(d_mu g_{rho nu} + d_nu g_{rho mu}
                                             - d_rho g_{mu nu})
"""

import sympy as sp

ETA = sp.diag(1, -1, -1, -1)


def build(name):
    t, r, th, ph = sp.symbols("t r theta phi", real=True)
    x, y, z = sp.symbols("x y z", real=True)
    if name == "minkowski":
        return (t, x, y, z), sp.diag(1, -1, -1, -1)
    if name == "spherical-minkowski":
        return (t, r, th, ph), sp.diag(1, -1, -(r**2), -(r**2) * sp.sin(th) ** 2)
    if name == "schwarzschild":
        f = 1 - 1 / r  # rs = 1
        return (t, r, th, ph), sp.diag(f, -1 / f, -(r**2), -(r**2) * sp.sin(th) ** 2)
    if name == "rindler":
        return (t, x, y, z), sp.diag((1 + x) ** 2, -1, -1, -1)  # a = 1
    raise ValueError(name)


def frame_objects(coords, g):
    # All built-ins are diagonal, so the signed-Cholesky vierbein is diagonal.
    e = sp.diag(sp.sqrt(g[0, 0]), *[sp.sqrt(-g[i, i]) for i in range(1, 4)])
    einv = sp.diag(*[1 / e[i, i] for i in range(4)])
    ginv = sp.diag(*[1 / g[i, i] for i in range(4)])

    om = [[[sp.S(0)] * 4 for _ in range(4)] for _ in range(4)]
    for mu in range(4):
        for nu in range(4):
            for lam in range(4):
                s = sum(
                    einv[a, lam] * sp.diff(e[a, nu], coords[mu])
                    - einv[a, lam] * sp.diff(e[a, mu], coords[nu])
                    for a in range(4)
                )
                om[mu][nu][lam] = sp.simplify(s / 2)

    def om_low(mu, nu, lam):
        return sum(om[mu][nu][rho] * g[rho, lam] for rho in range(4))

    spin = [[[sp.S(0)] * 4 for _ in range(4)] for _ in range(4)]
    for mu in range(4):
        for a in range(4):
            for b in range(4):
                tot = sp.S(0)
                for nu in range(4):
                    for lam in range(4):
                        s_low = (
                            om_low(mu, nu, lam)
                            - om_low(nu, lam, mu)
                            + om_low(lam, mu, nu)
                        )
                        # raise nu and lam, then convert to frame indices
                        for nu2 in range(4):
                            for lam2 in range(4):
                                tot += (
                                    e[a, nu2]
                                    * e[b, lam2]
                                    * ginv[nu2, nu]
                                    * ginv[lam2, lam]
                                    * s_low
                                )
                spin[mu][a][b] = sp.simplify(tot)

    chr_ = [[[sp.S(0)] * 4 for _ in range(4)] for _ in range(4)]
    for lam in range(4):
        for mu in range(4):
            for nu in range(4):
                s = sum(
                    ginv[lam, rho]
                    * (
                        sp.diff(g[rho, nu], coords[mu])
                        + sp.diff(g[rho, mu], coords[nu])
                        - sp.diff(g[mu, nu], coords[rho])
                    )
                    for rho in range(4)
                )
                chr_[lam][mu][nu] = sp.simplify(s / 2)
    return e, einv, om, spin, chr_


def postulate_residual(coords, g, e, spin, chr_, point):
    subs = dict(zip(coords, point))
    worst = 0.0
    for mu in range(4):
        for a in range(4):
            for nu in range(4):
                expr = sp.diff(e[a, nu], coords[mu])
                expr -= sum(chr_[lam][mu][nu] * e[a, lam] for lam in range(4))
                expr += sum(
                    ETA[b, c] * spin[mu][a][c] * e[b, nu]
                    for b in range(4)
                    for c in range(4)
                )
                worst = max(worst, abs(float(sp.N(expr.subs(subs), 30))))
    return worst


def report(name, point):
    coords, g = build(name)
    e, einv, om, spin, chr_ = frame_objects(coords, g)
    subs = dict(zip(coords, point))

    def val(expr):
        return sp.N(expr.subs(subs), 20)

    print(f"== {name} at {tuple(float(p) for p in point)}")
    print("  vierbein diag:", [val(e[i, i]) for i in range(4)])
    print("  Omega[1][0][0] (Om_rt^t):", val(om[1][0][0]))
    print("  Omega[0][1][0] (Om_tr^t):", val(om[0][1][0]))
    print("  spin[0][0][1]:", val(spin[0][0][1]))
    print("  christoffel[1][0][0] (Gamma^r_tt):", val(chr_[1][0][0]))
    print("  christoffel[0][0][1] (Gamma^t_tr):", val(chr_[0][0][1]))
    print("  christoffel[1][2][2] (Gamma^r_thth):", val(chr_[1][2][2]))
    print("  tetrad postulate residual:", postulate_residual(coords, g, e, spin, chr_, point))


if __name__ == "__main__":
    report("schwarzschild", (0, 2, sp.pi / 2, 0))
    report("schwarzschild", (0, 3, sp.Rational(10472, 10000), sp.Rational(1, 2)))
    report("rindler", (0, 3, 0, 0))
    report("rindler", (0, sp.Rational(1, 2), 0, 0))
    report("spherical-minkowski", (0, 2, 1, sp.Rational(3, 10)))
    report("minkowski", (0, 1, 2, 3))
