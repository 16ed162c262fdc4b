"""Demonstration data over Q: Ramanujan tau, Delta and its symmetric square, zeta and xi.

The symmetric square of Delta is an everywhere-unramified, self-dual, tempered
cuspidal representation of GL(3) over Q, which makes it a convenient Pi.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy.special import bernoulli, gamma

from ._util import is_prime, primes_upto
from .degenerate import D_F, LAMBDA_1, LAMBDA_1_BAR, XI_2, GlobalLValues
from .errors import DeligneViolation, InsufficientCache, ParseError, PoleAtOne, PoleAtZeroOrOne
from .hecke import gl3_lambda, local_L_gl3
from .local import LocalField, SatakeGL2, SatakeGL3

__all__ = [
    "TauTable",
    "tau_table",
    "delta_satake",
    "sym2_satake",
    "zeta",
    "xi_completed",
    "xi_residue_at_one",
    "LReport",
    "truncated_L_gl3",
    "dirichlet_L_gl3",
    "sym2_gamma_factor",
    "global_lvalues",
    "MainTerm",
    "corollary_main_term",
    "write_tau_cache",
    "read_tau_cache",
    "sigma",
    "DEFAULT_VARTHETA",
]

DEFAULT_VARTHETA = Fraction(7, 64)


# -- tau -------------------------------------------------------------------------------


def _pack(coeffs, nbytes):
    """Evaluate a polynomial with coefficients in [0, 256**nbytes) at 256**nbytes."""
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _unpack(value, nbytes, count):
    width = nbytes * count
    raw = (value & ((1 << (8 * width)) - 1)).to_bytes(width, "little")
    return [int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") for i in range(count)]


def _poly_mul(a, b, n):
    """Product of integer polynomials truncated to n coefficients (Kronecker substitution).

    Signs are split off so that every packed integer has non-negative digits.
    """
    a, b = a[:n], b[:n]
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    nbytes = (bound.bit_length() + 8) // 8
    parts = []
    for poly in (a, b):
        pos = _pack([max(c, 0) for c in poly], nbytes)
        neg = _pack([max(-c, 0) for c in poly], nbytes)
        parts.append((pos, neg))
    (ap, an), (bp, bn) = parts
    plus = _unpack(ap * bp + an * bn, nbytes, n)
    minus = _unpack(ap * bn + an * bp, nbytes, n)
    return [x - y for x, y in zip(plus, minus)]


def _eta_cubed(n):
    """prod (1 - x^k)^3 = sum_k (-1)^k (2k+1) x^{k(k+1)/2}, first n coefficients."""
    out = [0] * n
    k = 0
    while k * (k + 1) // 2 < n:
        out[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return out


@dataclass(frozen=True)
class TauTable:
    values: tuple  # tau(1), ..., tau(N)

    @property
    def N(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise InsufficientCache(f"tau({n}) outside the table (N = {self.N})")
        return self.values[n - 1]

    def normalized(self, n: int) -> float:
        return self[n] / n**5.5


def tau_table(N: int) -> TauTable:
    """tau(1..N) as the coefficients of x prod (1 - x^k)^24 = x (prod (1 - x^k)^3)^8."""
    if N < 1:
        raise ValueError("N must be >= 1")
    e3 = _eta_cubed(N)
    e6 = _poly_mul(e3, e3, N)
    e12 = _poly_mul(e6, e6, N)
    e24 = _poly_mul(e12, e12, N)
    return TauTable(tuple(e24))


def sigma(k: int, n: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def delta_satake(p: int, t: TauTable) -> SatakeGL2:
    """Unitary Satake pair of Delta at p: alpha + 1/alpha = tau(p) / p^{11/2}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lam = t[p] / p**5.5
    if abs(lam) > 2 + 1e-12:
        raise DeligneViolation(f"|tau({p})| / p^(11/2) = {abs(lam)} exceeds 2")
    lam = max(-2.0, min(2.0, lam))
    alpha = complex(lam / 2, math.sqrt(max(0.0, 1 - lam * lam / 4)))
    return SatakeGL2((alpha, alpha.conjugate()), 0)


def sym2_satake(p: int, t: TauTable) -> SatakeGL3:
    a = delta_satake(p, t).params[0]
    return SatakeGL3((a * a, 1.0 + 0j, (a * a).conjugate()), 0.0)


# -- zeta and xi -----------------------------------------------------------------------

_EM_TERMS = 24
_B2K = bernoulli(2 * _EM_TERMS)[2::2]  # B_2, B_4, ..., B_{2M}


def zeta(s) -> complex:
    """Riemann zeta by Euler-Maclaurin summation."""
    s = complex(s)
    if s == 1:
        raise PoleAtOne("zeta has a pole at s = 1")
    N = max(30, int(abs(s)) + 30)
    n = np.arange(1, N, dtype=float)
    head = np.sum(np.exp(-s * np.log(n)))
    Ns = cmath.exp(-s * math.log(N))
    total = head + N * Ns / (s - 1) + Ns / 2
    # sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    rising = s
    fact = 2.0
    powN = Ns / N
    for k in range(1, _EM_TERMS + 1):
        total += _B2K[k - 1] / fact * rising * powN
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
        powN /= N * N
    return complex(total)


def xi_completed(s) -> complex:
    """pi^{-s/2} Gamma(s/2) zeta(s)."""
    s = complex(s)
    if s == 0 or s == 1:
        raise PoleAtZeroOrOne(f"xi has a pole at s = {s.real:g}")
    return complex(math.pi ** (-s / 2) * gamma(s / 2) * zeta(s))


def xi_residue_at_one(h: float = 1e-4) -> float:
    """Symmetric estimate (h xi(1+h) - h xi(1-h)) / 2 of the residue at 1 (error O(h^2))."""
    return ((h * xi_completed(1 + h) - h * xi_completed(1 - h)) / 2).real


# -- L-values of sym^2 Delta --------------------------------------------------------------


@dataclass
class LReport:
    value: complex
    trace: list  # (p, running product)
    last_change: float
    certified: bool
    prime_cutoff: int
    notes: list = field(default_factory=list)


def truncated_L_gl3(t: TauTable, s, P: int) -> LReport:
    """Euler product over p <= P of the sym^2 Delta local factors."""
    if P > t.N:
        raise InsufficientCache(f"prime cutoff {P} exceeds the tau table (N = {t.N})")
    value = 1 + 0j
    trace = []
    for p in primes_upto(P):
        value *= local_L_gl3(sym2_satake(p, t), s, LocalField(p))
        trace.append((p, value))
    last = abs(trace[-1][1] - trace[-2][1]) if len(trace) >= 2 else math.inf
    certified = complex(s).real > 1
    notes = [] if certified else ["Re s <= 1: conditional convergence, value is an estimate"]
    return LReport(value, trace, last, certified, P, notes)


def dirichlet_L_gl3(t: TauTable, s, N: int) -> complex:
    """sum_{n <= N} lambda_Pi(n) n^{-s}, coefficients multiplicative from the Satake data."""
    if N > t.N:
        raise InsufficientCache(f"N = {N} exceeds the tau table (N = {t.N})")
    coeff = np.ones(N + 1, dtype=complex)
    coeff[0] = 0
    for p in primes_upto(N):
        rep = sym2_satake(p, t)
        k = 1
        pk = p
        while pk <= N:
            lam = gl3_lambda(rep, k, 0)
            # n with exact p-power p^k
            idx = np.arange(pk, N + 1, pk)
            idx = idx[(idx // pk) % p != 0]
            coeff[idx] *= lam
            k += 1
            pk *= p
    n = np.arange(1, N + 1, dtype=float)
    return complex(np.sum(coeff[1:] * np.exp(-complex(s) * np.log(n))))


def _gamma_R(s):
    return math.pi ** (-s / 2) * gamma(s / 2)


def sym2_gamma_factor(s) -> complex:
    """Gamma_R(s+1) Gamma_R(s+11) Gamma_R(s+12)."""
    s = complex(s)
    return complex(_gamma_R(s + 1) * _gamma_R(s + 11) * _gamma_R(s + 12))


def global_lvalues(t: TauTable, P: int) -> GlobalLValues:
    """Central-point constants for Pi = sym^2 Delta (Lambda(1) is an Euler-product estimate)."""
    rep = truncated_L_gl3(t, 1, P)
    lam1 = sym2_gamma_factor(1) * rep.value
    L = GlobalLValues(self_dual=True)
    L.set(LAMBDA_1, lam1, "computed-by-global_q (estimate)")
    # sym^2 Delta is self-dual, so Pi_bar = Pi
    L.set(LAMBDA_1_BAR, lam1, "computed-by-global_q (estimate, self-dual)")
    L.set(XI_2, xi_completed(2), "computed-by-global_q")
    L.set(D_F, 1, "user-supplied")
    L.xi_F = xi_completed
    return L


@dataclass(frozen=True)
class MainTerm:
    main: complex
    error_exponent: float
    weight_prefactor: Fraction


def corollary_main_term(L: GlobalLValues, p: int, vartheta=DEFAULT_VARTHETA) -> MainTerm:
    """4 Lambda(1, Pi) Lambda(0, Pi) / xi_F(2) with decay exponent vartheta - 1/2."""
    num = 4 * L.lam(1) * L.lam(0)
    xi2 = L.xi(2)
    if isinstance(num, (int, Fraction)) and isinstance(xi2, (int, Fraction)):
        main = Fraction(num) / xi2
    else:
        main = num / xi2
    return MainTerm(main, vartheta - Fraction(1, 2), Fraction(p - 1, p * p))


# -- tau cache ------------------------------------------------------------------------------


def write_tau_cache(path, t: TauTable) -> None:
    """Write "n,tau(n)" lines; the same table always yields the same bytes."""
    text = "".join(f"{n},{v}\n" for n, v in enumerate(t.values, start=1))
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def read_tau_cache(path) -> TauTable:
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            n_str, v_str = line.split(",")
            n, v = int(n_str), int(v_str)
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: malformed record {line!r}") from exc
        if n != len(values) + 1:
            raise ParseError(f"{path}:{lineno}: expected index {len(values) + 1}, got {n}")
        values.append(v)
    return TauTable(tuple(values))
