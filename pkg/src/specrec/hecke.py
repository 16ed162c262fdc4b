"""Hecke eigenvalues as Schur polynomials and the local L-factors built from them.

Slot convention for GL(3): ``gl3_lambda(rep, a, b)`` is the Schur polynomial of
the partition ``(a + b, b, 0)``.  The first index is the one paired with
``q^{-nu s}`` in the GL(3) x GL(2) Rankin-Selberg series and with
``q^{-nu (s + w)}`` in the double Dirichlet series of the degenerate term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .errors import (
    CoprimalityViolation,
    MissingLocalRep,
    NegativeIndex,
    PoleAtEvaluationPoint,
    RamifiedAdjointUnsupported,
)
from .local import LocalField, SatakeGL2, SatakeGL3
from .series import TruncSeries, series_inv, series_mul

__all__ = [
    "IdealFactorization",
    "gl2_lambda",
    "gl2_lambdas",
    "gl3_lambda",
    "gl3_complete_homogeneous",
    "lambda_hat",
    "lambda_hat_divisor_sum",
    "local_L_gl2",
    "local_L_gl3",
    "local_L_rs",
    "local_L_gl2xgl2",
    "local_L_adjoint",
    "rs_series",
    "rs_series_check",
    "SeriesCheckReport",
]

_POLE_TOL = 1e-14


# -- ideals ------------------------------------------------------------------


@dataclass(frozen=True)
class IdealFactorization:
    """An integral ideal as {prime label: exponent}; the label is the residue cardinality.

    ``d`` optionally carries the additive-conductor exponent at each prime.
    """

    exponents: Mapping[int, int] = field(default_factory=dict)
    d: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        exps = {int(p): int(n) for p, n in dict(self.exponents).items()}
        for p, n in exps.items():
            if n < 1:
                raise ValueError(f"exponent at {p} must be >= 1, got {n}")
            LocalField(p)  # validates prime power
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "d", {int(p): int(v) for p, v in dict(self.d).items()})

    @classmethod
    def unit(cls) -> "IdealFactorization":
        return cls({})

    @classmethod
    def prime_power(cls, p: int, n: int = 1, d: int = 0) -> "IdealFactorization":
        return cls({p: n}, {p: d} if d else {})

    @property
    def norm(self) -> int:
        out = 1
        for p, n in self.exponents.items():
            out *= p**n
        return out

    @property
    def primes(self) -> list[int]:
        return sorted(self.exponents)

    def field(self, p: int) -> LocalField:
        return LocalField(p, self.d.get(p, 0))

    def is_unit(self) -> bool:
        return not self.exponents

    def coprime(self, other: "IdealFactorization") -> bool:
        return not (set(self.exponents) & set(other.exponents))

    def require_coprime(self, other: "IdealFactorization") -> None:
        if not self.coprime(other):
            shared = sorted(set(self.exponents) & set(other.exponents))
            raise CoprimalityViolation(f"ideals share the primes {shared}")

    def totient(self) -> int:
        out = 1
        for p, n in self.exponents.items():
            out *= p**n - p ** (n - 1)
        return out


# -- eigenvalues ---------------------------------------------------------------


def gl2_lambdas(rep: SatakeGL2, N: int) -> list:
    """[lambda(0), ..., lambda(N)] for the newvector of ``rep``."""
    if N < 0:
        raise NegativeIndex("N must be >= 0")
    if rep.conductor >= 2:
        return [1] + [0] * N
    if rep.conductor == 1:
        (a,) = rep.params
        out, t = [], 1
        for _ in range(N + 1):
            out.append(t)
            t = t * a
        return out
    a, b = rep.params
    e1, e2 = a + b, a * b
    out = [1]
    if N >= 1:
        out.append(e1)
    for k in range(2, N + 1):
        out.append(e1 * out[k - 1] - e2 * out[k - 2])
    return out


def gl2_lambda(rep: SatakeGL2, nu: int):
    if nu < 0:
        raise NegativeIndex(f"negative Hecke index {nu}")
    return gl2_lambdas(rep, nu)[nu]


@lru_cache(maxsize=256)
def _h_block(gammas: tuple, K: int) -> tuple:
    g1, g2, g3 = gammas
    e1, e2, e3 = g1 + g2 + g3, g1 * g2 + g1 * g3 + g2 * g3, g1 * g2 * g3
    h = [1]
    for k in range(1, K + 1):
        v = e1 * h[k - 1]
        if k >= 2:
            v -= e2 * h[k - 2]
        if k >= 3:
            v += e3 * h[k - 3]
        h.append(v)
    return tuple(h)


def gl3_complete_homogeneous(rep: SatakeGL3, K: int) -> tuple:
    """(h_0, ..., h_K) of the three Satake parameters (at least K+1 entries)."""
    size = 16
    while size < K:
        size *= 2
    return _h_block(tuple(rep.gammas), size)


def gl3_lambda(rep: SatakeGL3, nu_a: int, nu_b: int):
    """Schur polynomial s_{(a+b, b, 0)}(gamma) by the 2x2 Jacobi-Trudi determinant."""
    if nu_a < 0 or nu_b < 0:
        raise NegativeIndex(f"negative Hecke index ({nu_a}, {nu_b})")
    h = gl3_complete_homogeneous(rep, nu_a + nu_b + 1)
    top = nu_a + nu_b
    val = h[top] * h[nu_b]
    if nu_b >= 1:
        val -= h[top + 1] * h[nu_b - 1]
    return val


def _gl3_lambda_magnitude(rep: SatakeGL3, nu_a: int, nu_b: int) -> float:
    """Size of the products entering gl3_lambda; scales the rounding allowance."""
    h = gl3_complete_homogeneous(rep, nu_a + nu_b + 1)
    top = nu_a + nu_b
    mag = abs(h[top] * h[nu_b])
    if nu_b >= 1:
        mag += abs(h[top + 1] * h[nu_b - 1])
    return mag


# -- modified eigenvalues ------------------------------------------------------


def _local_factor_hat(rep: SatakeGL2, F: LocalField, n: int, w):
    lam = gl2_lambdas(rep, n)
    return lam[n] - lam[n - 1] * F.pow(-w)


def lambda_hat(reps: Mapping[int, SatakeGL2], l: IdealFactorization, w):
    """Product over p^n || l of (lambda(p^n) - lambda(p^{n-1}) q^{-w})."""
    out = 1
    for p in l.primes:
        if p not in reps:
            raise MissingLocalRep(f"no local representation supplied at {p}")
        out = out * _local_factor_hat(reps[p], l.field(p), l.exponents[p], w)
    return out


def lambda_hat_divisor_sum(reps: Mapping[int, SatakeGL2], l: IdealFactorization, w):
    """sum over ab = l of mu(a) N(a)^{-w} lambda(b), enumerated over squarefree a."""
    primes = l.primes
    for p in primes:
        if p not in reps:
            raise MissingLocalRep(f"no local representation supplied at {p}")
    tables = {p: gl2_lambdas(reps[p], l.exponents[p]) for p in primes}
    total = 0
    for mask in itertools.product((0, 1), repeat=len(primes)):
        sign = (-1) ** sum(mask)
        norm_a_pow = 1
        lam_b = 1
        for p, bit in zip(primes, mask):
            if bit:
                norm_a_pow = norm_a_pow * l.field(p).pow(-w)
            lam_b = lam_b * tables[p][l.exponents[p] - bit]
        total += sign * norm_a_pow * lam_b
    return total


# -- local L-factors -----------------------------------------------------------


def _euler(params, x):
    out = 1
    for g in params:
        f = 1 - g * x
        if abs(f) < _POLE_TOL:
            raise PoleAtEvaluationPoint(f"factor 1 - {g} * {x} vanishes")
        out = out * f
    return 1 / out


def local_L_gl2(rep: SatakeGL2, s, F: LocalField):
    return _euler(rep.params, F.pow(-s))


def local_L_gl3(rep: SatakeGL3, s, F: LocalField):
    return _euler(rep.gammas, F.pow(-s))


def local_L_rs(Pi: SatakeGL3, pi: SatakeGL2, s, F: LocalField):
    return _euler([g * a for g in Pi.gammas for a in pi.params], F.pow(-s))


def local_L_gl2xgl2(pi1: SatakeGL2, pi2: SatakeGL2, s, F: LocalField):
    return _euler([a * b for a in pi1.params for b in pi2.params], F.pow(-s))


def local_L_adjoint(rep: SatakeGL2, s, F: LocalField):
    if rep.conductor != 0:
        raise RamifiedAdjointUnsupported("the adjoint factor is only implemented for unramified representations")
    a, b = rep.params
    return _euler([a / b, 1, b / a], F.pow(-s))


# -- Rankin-Selberg series identity ----------------------------------------------


@dataclass
class SeriesCheckReport:
    max_deviation: float
    order: int
    lhs: TruncSeries
    rhs: TruncSeries

    @property
    def exact_match(self) -> bool:
        return self.lhs.exact and self.rhs.exact and self.lhs.coeffs == self.rhs.coeffs


def rs_series(Pi: SatakeGL3, pi: SatakeGL2, order: int) -> TruncSeries:
    """sum_{nu <= order} lambda_Pi(nu, 0) lambda_pi(nu) x^nu."""
    lam = gl2_lambdas(pi, order)
    return TruncSeries([gl3_lambda(Pi, nu, 0) * lam[nu] for nu in range(order + 1)])


def _euler_polynomial(params, order: int) -> TruncSeries:
    poly = TruncSeries.constant(1, order)
    for g in params:
        poly = series_mul(poly, TruncSeries([1, -g] + [0] * (order - 1)) if order >= 1 else TruncSeries([1]))
    return poly


def rs_series_check(Pi: SatakeGL3, pi: SatakeGL2, order: int) -> SeriesCheckReport:
    """Compare the eigenvalue series with the expansion of the naive RS L-factor."""
    lhs = rs_series(Pi, pi, order)
    rhs = series_inv(_euler_polynomial([g * a for g in Pi.gammas for a in pi.params], order))
    return SeriesCheckReport(lhs.max_deviation(rhs), order, lhs, rhs)
