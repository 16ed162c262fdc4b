"""Hecke eigenvalues as Schur polynomials and the Rankin-Selberg series identity."""

from __future__ import annotations

import cmath
from fractions import Fraction

from specrec import LocalField, SatakeGL2, SatakeGL3, gl3_lambda, local_L_rs, rs_series_check

triv = SatakeGL3.trivial()
print("lambda_Pi(a, b) at trivial Satake data (Weyl dimensions):")
for a in range(4):
    print("  ", [gl3_lambda(triv, a, b) for b in range(4)])

Pi = SatakeGL3((cmath.exp(0.3j), cmath.exp(-1.2j), cmath.exp(0.9j)))
pi = SatakeGL2.ramified(1, -(3**-0.5))
rep = rs_series_check(Pi, pi, 30)
print(f"\nGL(3) x GL(2) series vs Euler factor, conductor-1 pi: max deviation {rep.max_deviation:.2e}")

exact = rs_series_check(triv, SatakeGL2.ramified(1, Fraction(1, 2)), 8)
print("exact coefficients with alpha = 1/2:", [str(c) for c in exact.lhs.coeffs])

F = LocalField(3)
print(f"L(1, Pi x pi) at q = 3: {local_L_rs(Pi, pi, 1, F):.12f}")
