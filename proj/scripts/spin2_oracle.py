#!/usr/bin/env python3
"""Brute-force oracle for the double-epsilon spin-2 kinetic operator.

Evaluates T^{eg} = eps^{cade} eps_c{}^{bfg} k_d k_f A_ab by naive summation
over all index assignments (the C++ library uses the equivalent closed form),
verifies the epsilon contraction identity against the delta-determinant
expansion over every free-index combination, and prints the values frozen into
the C++ test suite.
"""

import itertools
from fractions import Fraction

ETA = [1, -1, -1, -1]


def eps_sign(p):
    """Levi-Civita symbol with eps(0,1,2,3) = +1, as a plain permutation sign."""
    p = list(p)
    sign = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] == p[j]:
                return 0
            if p[i] > p[j]:
                p[i], p[j] = p[j], p[i]
                sign = -sign
    return sign


def kinetic_brute(A, k):
    """T^{eg}; first epsilon upper, second with its first index lowered by eta."""
    T = [[Fraction(0)] * 4 for _ in range(4)]
    for e in range(4):
        for g in range(4):
            tot = Fraction(0)
            for c, a, d, b, f in itertools.product(range(4), repeat=5):
                # eps_c^{bfg} = eta_cc' eps^{c'bfg} (diagonal eta)
                tot += (
                    eps_sign((c, a, d, e))
                    * ETA[c]
                    * eps_sign((c, b, f, g))
                    * k[d]
                    * k[f]
                    * A[a][b]
                )
            T[e][g] = tot
    return T


def contraction_identity_ok():
    """sum_c eta_cc eps^{cade} eps^{cbfg} == -det of the 3x3 eta minor."""
    for a, d, e, b, f, g in itertools.product(range(4), repeat=6):
        lhs = sum(ETA[c] * eps_sign((c, a, d, e)) * eps_sign((c, b, f, g)) for c in range(4))

        def eta(i, j):
            return ETA[i] if i == j else 0

        m = [
            [eta(a, b), eta(a, f), eta(a, g)],
            [eta(d, b), eta(d, f), eta(d, g)],
            [eta(e, b), eta(e, f), eta(e, g)],
        ]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if lhs != -det:
            return False
    return True


def action_density(A, k, kappa_inv8):
    T = kinetic_brute(A, k)
    q = sum(A[a][b] * T[a][b] for a in range(4) for b in range(4))
    return q * kappa_inv8


def main():
    print("epsilon contraction identity (all 4^6 combinations):", contraction_identity_ok())

    k = [Fraction(1), 0, 0, 0]
    A = [[Fraction(0)] * 4 for _ in range(4)]
    A[1][1] = A[2][2] = A[3][3] = Fraction(1)
    T = kinetic_brute(A, k)
    print("k=(1,0,0,0), A=diag(0,1,1,1):")
    print("  T diag:", [T[i][i] for i in range(4)])
    print("  off-diagonal all zero:", all(T[i][j] == 0 for i in range(4) for j in range(4) if i != j))
    print("  A_ab T^{ab}:", sum(A[a][b] * T[a][b] for a in range(4) for b in range(4)))
    print("  Q = A.T/(8 kappa) with kappa = 8 pi: -6/(64 pi) = -3/(32 pi)")

    k = [Fraction(1), Fraction(1), 0, 0]
    A = [[Fraction(0)] * 4 for _ in range(4)]
    A[2][2] = Fraction(1)
    A[3][3] = Fraction(-1)
    T = kinetic_brute(A, k)
    print("null k=(1,1,0,0), TT A (A22=-A33=1): max|T| =",
          max(abs(T[i][j]) for i in range(4) for j in range(4)))

    # pure gauge: A_ab = k_a xi_b + xi_a k_b
    k = [Fraction(3), Fraction(1), Fraction(-2), Fraction(5)]
    xi = [Fraction(1), Fraction(4), Fraction(1), Fraction(-1)]
    G = [[k[a] * xi[b] + xi[a] * k[b] for b in range(4)] for a in range(4)]
    T = kinetic_brute(G, k)
    print("pure gauge (rational k, xi): max|T| =",
          max(abs(T[i][j]) for i in range(4) for j in range(4)))


if __name__ == "__main__":
    main()
