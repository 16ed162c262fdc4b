from __future__ import annotations

import cmath
import math
from fractions import Fraction

import sympy

EPS = 2.0**-52


def rounding_bound(magnitude: float, nterms: int, depth: int = 32) -> float:
    """Floating-point error allowance for a recursive sum of ``nterms`` computed terms.

    Standard bound (n + k) u sum|x_i|, with ``depth`` covering the operations
    spent forming each term and u = EPS.
    """
    return (nterms + depth) * EPS * magnitude


def qpow(q, z):
    """q**z on the principal branch exp(z log q), with real log q; exact for integer z."""
    if isinstance(z, int):
        return q**z if z >= 0 else Fraction(1, q ** (-z))
    if z == 0:
        return 1.0
    return cmath.exp(z * math.log(q))


def zeta_local(s, q) -> complex:
    return 1.0 / (1.0 - qpow(q, -s))


def euler_phi_prime_power(q: int, n: int) -> int:
    if n == 0:
        return 1
    return q**n - q ** (n - 1)


def vol_congruence(q: int, f: int) -> float:
    """Volume of K[f] in a maximal compact of total mass 1 (index q^{f-1}(q+1))."""
    if f == 0:
        return 1.0
    return 1.0 / (q ** (f - 1) * (q + 1))


def prime_power_base(q: int) -> int | None:
    if q < 2:
        return None
    f = sympy.factorint(q)
    if len(f) != 1:
        return None
    return next(iter(f))


def is_prime(p: int) -> bool:
    return bool(sympy.isprime(p))


def primes_upto(P: int) -> list[int]:
    return list(sympy.primerange(2, P + 1))


def poly_geom_tail(c: float, deg: int, rho: float, start: int) -> float:
    """Upper bound for sum_{v >= start} (v + c)^deg rho^v with c > 0.

    Successive-term ratios ((v+1+c)/(v+c))^deg rho decrease in v, so once the
    ratio drops below one the remaining tail is dominated by a geometric series.
    """
    if rho == 0:
        return float((start + c) ** deg) if start == 0 else 0.0
    if rho >= 1:
        return math.inf
    total = 0.0
    v = start
    while True:
        ratio = ((v + 1 + c) / (v + c)) ** deg * rho
        term = (v + c) ** deg * rho**v
        if ratio < 0.999:
            return total + term / (1.0 - ratio)
        total += term
        v += 1
        if v > start + 100000:
            return math.inf


def cutoff_for(c: float, deg: int, rho: float, tol: float, scale: float = 1.0, start: int = 0) -> int:
    """Smallest N >= start with scale * sum_{v > N} (v+c)^deg rho^v < tol."""
    if scale == 0 or rho == 0:
        return start
    if rho >= 1:
        return -1
    N = start
    step = 1
    while scale * poly_geom_tail(c, deg, rho, N + 1) >= tol:
        N += step
        step = min(step * 2, 64)
        if N > 10**6:
            return -1
    return N
