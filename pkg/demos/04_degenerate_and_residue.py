"""Bump's double series, the degenerate Euler product and the central constants."""

from __future__ import annotations

import cmath
from fractions import Fraction

from specrec import EvalPoint, GlobalLValues, IdealFactorization, SatakeGL3, bump_check, central_degenerate, d_global, residue_term

Pi = SatakeGL3((cmath.exp(0.4j), cmath.exp(-1.1j), cmath.exp(0.7j)))
print(f"double-series identity at degree 12: max deviation {bump_check(Pi, 12).max_deviation:.2e}")

rep = d_global(Pi, IdealFactorization.unit(), EvalPoint(0.9, 0.8), 200)
print(f"degenerate product over p <= 200 at (0.9, 0.8): {rep.value:.10f}  (tail estimate {rep.tail_estimate:.1e}, uncertified)")

c, z = Fraction(7, 3), Fraction(5, 11)
L = GlobalLValues.placeholder(c, z)
half = Fraction(1, 2)
one = IdealFactorization.unit()
print("residue at the central point:", residue_term(L, SatakeGL3.trivial(), one, one, EvalPoint(half, half)))
print("central degenerate constant: ", central_degenerate(L))
print("2 c^2 / z:                   ", 2 * c * c / z)
