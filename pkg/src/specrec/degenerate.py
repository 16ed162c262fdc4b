"""The degenerate (non-spectral) term and the residue term at the degenerate Eisenstein point.

Unramified local factors come from the double Dirichlet series

    sum_{a, b >= 0} lambda_Pi(a, b) A^a B^b = (1 - AB) / (prod (1 - g A) prod (1 - g^{-1} B)),

with A = q^{-(s+w)} and B = q^{-2s}; at primes dividing l the series keeps only a >= m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ._util import poly_geom_tail, primes_upto, rounding_bound
from .errors import MissingLabel, PoleAtEvaluationPoint, RegionViolation, TruncationInsufficient
from .hecke import IdealFactorization, _gl3_lambda_magnitude, gl3_lambda, local_L_gl3
from .local import EvalPoint, LocalField, SatakeGL3, dual_gl3, dual_point
from .weights import WeightValue, d_weight

__all__ = [
    "GlobalLValues",
    "j_unramified",
    "BumpReport",
    "bump_check",
    "j_divides_l",
    "DegenerateReport",
    "d_global",
    "central_degenerate",
    "residue_term",
    "LAMBDA_1",
    "LAMBDA_0",
    "LAMBDA_1_BAR",
    "XI_2",
    "D_F",
]

LAMBDA_1 = "Lambda(1,Pi)"
LAMBDA_0 = "Lambda(0,Pi)"
LAMBDA_1_BAR = "Lambda(1,Pi_bar)"
XI_2 = "xi_F(2)"
D_F = "d_F"


# -- global constants --------------------------------------------------------------


@dataclass
class GlobalLValues:
    """Labelled global constants with provenance.

    ``self_dual`` must be declared for Lambda(0, Pi) and Lambda(1, Pi_bar) to
    stand in for one another.  ``Lambda_Pi`` and ``xi_F`` are optional callables
    for evaluation away from the central point.
    """

    values: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    self_dual: bool = False
    Lambda_Pi: Callable | None = None
    xi_F: Callable | None = None

    @classmethod
    def placeholder(cls, c, z, d_F=1, self_dual: bool = True) -> "GlobalLValues":
        vals = {LAMBDA_1: c, LAMBDA_0: c, LAMBDA_1_BAR: c, XI_2: z, D_F: d_F}
        return cls(vals, {k: "user-supplied" for k in vals}, self_dual)

    def set(self, label: str, value, provenance: str = "user-supplied") -> None:
        self.values[label] = value
        self.provenance[label] = provenance

    def get(self, label: str):
        if label in self.values:
            return self.values[label]
        if self.self_dual and label == LAMBDA_0 and LAMBDA_1_BAR in self.values:
            return self.values[LAMBDA_1_BAR]
        if self.self_dual and label == LAMBDA_1_BAR and LAMBDA_0 in self.values:
            return self.values[LAMBDA_0]
        if label == D_F:
            return 1
        hint = " (declare self_dual to substitute its partner)" if label in (LAMBDA_0, LAMBDA_1_BAR) else ""
        raise MissingLabel(f"global value {label!r} not supplied{hint}")

    def lam(self, s):
        """Lambda(s, Pi): labels at s = 0, 1, otherwise the callable."""
        if s == 1 and LAMBDA_1 in self.values:
            return self.values[LAMBDA_1]
        if s == 0 and (LAMBDA_0 in self.values or self.self_dual):
            return self.get(LAMBDA_0)
        if self.Lambda_Pi is None:
            raise MissingLabel(f"Lambda({s},Pi) needs a Lambda_Pi callable")
        return self.Lambda_Pi(s)

    def xi(self, s):
        if s == 2 and XI_2 in self.values:
            return self.values[XI_2]
        if self.xi_F is None:
            raise MissingLabel(f"xi_F({s}) needs an xi_F callable")
        return self.xi_F(s)


def _half_integer_power(d, e2: int):
    """d^{e2/2}, exact when d is a perfect square integer."""
    if isinstance(d, int) and d > 0:
        r = math.isqrt(d)
        if r * r == d:
            return r**e2 if e2 >= 0 else Fraction(1, r ** (-e2))
    return d ** (e2 / 2)


# -- local factors -------------------------------------------------------------------


def j_unramified(Pi: SatakeGL3, F: LocalField, pt: EvalPoint):
    """q^{d(3s+w-2)} L(s+w, Pi) L(2s, Pi~) / zeta_v(3s+w); Pi~ is the contragredient."""
    s, w = pt.s, pt.w
    zeta_inv = 1 - F.pow(-(3 * s + w))
    if abs(zeta_inv) < 1e-14:
        raise PoleAtEvaluationPoint("zeta_v(3s+w) has a pole")
    return F.pow(F.d * (3 * s + w - 2)) * local_L_gl3(Pi, s + w, F) * local_L_gl3(dual_gl3(Pi), 2 * s, F) * zeta_inv


@dataclass
class BumpReport:
    max_deviation: float
    order: int
    lhs: list  # lhs[a][b] = lambda_Pi(a, b), a + b <= order
    rhs: list

    def coeff(self, a: int, b: int):
        return self.lhs[a][b], self.rhs[a][b]


def _bivariate_mul(X, Y, N):
    out = [[0] * (N + 1 - a) for a in range(N + 1)]
    for a1, row1 in enumerate(X):
        for b1, c1 in enumerate(row1):
            if c1 == 0:
                continue
            for a2 in range(N + 1 - a1 - b1):
                row2 = Y[a2]
                for b2 in range(min(len(row2), N + 1 - a1 - b1 - a2)):
                    out[a1 + a2][b1 + b2] += c1 * row2[b2]
    return out


def bump_check(Pi: SatakeGL3, order: int) -> BumpReport:
    """Coefficient table of the double series against the expanded closed form."""
    N = order
    lhs = [[gl3_lambda(Pi, a, b) for b in range(N + 1 - a)] for a in range(N + 1)]
    inv = dual_gl3(Pi).gammas
    rhs = [[1 if a == b == 0 else 0 for b in range(N + 1 - a)] for a in range(N + 1)]
    for g in Pi.gammas:  # 1 / (1 - g A)
        geo = [[g**a if b == 0 else 0 for b in range(N + 1 - a)] for a in range(N + 1)]
        rhs = _bivariate_mul(rhs, geo, N)
    for g in inv:  # 1 / (1 - g^{-1} B)
        geo = [[g**b if a == 0 else 0 for b in range(N + 1 - a)] for a in range(N + 1)]
        rhs = _bivariate_mul(rhs, geo, N)
    one_minus_ab = [[0] * (N + 1 - a) for a in range(N + 1)]
    one_minus_ab[0][0] = 1
    if N >= 2:
        one_minus_ab[1][1] = -1
    rhs = _bivariate_mul(rhs, one_minus_ab, N)
    dev = max(abs(lhs[a][b] - rhs[a][b]) for a in range(N + 1) for b in range(N + 1 - a))
    return BumpReport(float(dev), N, lhs, rhs)


def j_divides_l(Pi: SatakeGL3, F: LocalField, m: int, pt: EvalPoint, tol: float = 1e-10) -> WeightValue:
    """q^{d(3s+w-2)} sum_{a >= m, b >= 0} lambda_Pi(a, b) A^a B^b, truncated to a box."""
    if m < 1:
        raise ValueError("exponent m must be >= 1")
    s, w = pt.s, pt.w
    A, B = F.pow(-(s + w)), F.pow(-2 * s)
    R = Pi.max_modulus
    rA, rB = R * abs(A), R * abs(B)
    if rA >= 1 or rB >= 1:
        raise TruncationInsufficient(f"double series diverges (ratios {rA:.3g}, {rB:.3g})", math.inf)
    pref = F.pow(F.d * (3 * s + w - 2))

    # |lambda(a, b)| <= (a+1)^2 (b+1)^2 R^{a+b}
    def tail(N):
        t1 = poly_geom_tail(1, 2, rA, m + N + 1) * poly_geom_tail(1, 2, rB, 0)
        t2 = poly_geom_tail(1, 2, rA, m) * poly_geom_tail(1, 2, rB, N + 1)
        return abs(pref) * (t1 + t2)

    N = 8
    while tail(N) >= tol:
        N *= 2
        if N > 4096:
            raise TruncationInsufficient("j_divides_l needs more than 4096 terms per variable", tail(N))
    total = 0j
    mag = 0.0
    Ap = A**m
    for a in range(m, m + N + 1):
        Bp = 1.0
        for b in range(N + 1):
            total += gl3_lambda(Pi, a, b) * Ap * Bp
            mag += _gl3_lambda_magnitude(Pi, a, b) * abs(Ap * Bp)
            Bp *= B
        Ap *= A
    return WeightValue(pref * total, tail(N) + rounding_bound(abs(pref) * mag, (N + 1) ** 2), N)


# -- global product ------------------------------------------------------------------


@dataclass
class DegenerateReport:
    value: complex
    trace: list  # (prime, running value)
    tail_estimate: float
    certified: bool = False
    prime_cutoff: int = 0
    local_bounds: float = 0.0


def _Pi_at(Pi, p):
    if isinstance(Pi, SatakeGL3):
        return Pi
    if callable(Pi):
        return Pi(p)
    return Pi[p]


def d_global(
    Pi,
    l: IdealFactorization,
    pt: EvalPoint,
    prime_cutoff: int,
    tol: float = 1e-10,
    d_F=1,
    theta: float | None = None,
) -> DegenerateReport:
    """2 d_F^{7/2 - 3s' - w'} prod_{p <= P} J_p with an uncertified estimate of the omitted tail.

    ``Pi`` is a SatakeGL3, a map prime -> SatakeGL3 or a callable.  Primes of
    ``l`` above the cutoff are always included.
    """
    s, w = pt.s, pt.w
    th = theta if theta is not None else (Pi.theta if isinstance(Pi, SatakeGL3) else 0.0)
    if not EvalPoint(s, w).in_bump_region(th):
        raise RegionViolation(f"({s}, {w}) outside Re(3s+w) > 1, Re(s+w) > theta, Re(2s) > theta")
    dp = dual_point(pt)
    value = 2 * complex(d_F) ** (3.5 - 3 * dp.s - dp.w)
    primes = sorted(set(primes_upto(prime_cutoff)) | set(l.primes))
    trace = []
    bounds = 0.0
    for p in primes:
        F = l.field(p) if p in l.exponents else LocalField(p)
        Pp = _Pi_at(Pi, p)
        if p in l.exponents:
            jv = j_divides_l(Pp, F, l.exponents[p], pt, tol / max(1, len(l.primes)))
            bounds = (abs(value) + bounds) * (abs(jv.value) + jv.tail_bound) - abs(value * jv.value)
            value = value * jv.value
        else:
            jv = j_unramified(Pp, F, pt)
            bounds *= abs(jv)
            value = value * jv
        trace.append((p, value))
    # |log J_p| ~ 3 p^{theta-(s+w)} + 3 p^{theta-2s}; the sum over p > P by the prime-counting integral
    P = max(prime_cutoff, 2)
    est = 0.0
    for sigma in ((complex(s) + complex(w)).real, 2 * complex(s).real):
        sig = sigma - th
        if sig <= 1:
            est = math.inf
            break
        est += 3 * P ** (1 - sig) / ((sig - 1) * math.log(P))
    tail_est = abs(value) * (math.exp(est) - 1) if est < 50 else math.inf
    return DegenerateReport(value, trace, tail_est, False, prime_cutoff, bounds)


# -- central constants ------------------------------------------------------------------


def central_degenerate(L: GlobalLValues):
    """2 d_F^{3/2} Lambda(1, Pi) Lambda(1, Pi_bar) / xi_F(2)."""
    lam1 = L.get(LAMBDA_1)
    lam1bar = L.get(LAMBDA_1_BAR)
    xi2 = L.get(XI_2)
    d = L.get(D_F)
    num = 2 * _half_integer_power(d, 3) * lam1 * lam1bar
    if isinstance(num, (int, Fraction)) and isinstance(xi2, (int, Fraction)):
        return Fraction(num) / xi2
    return num / xi2


def _is_central(pt: EvalPoint) -> bool:
    return pt.s == pt.w == Fraction(1, 2) or (complex(pt.s) == 0.5 and complex(pt.w) == 0.5)


def _degenerate_weight(Pi, q: IdealFactorization, l: IdealFactorization, pt: EvalPoint, tol: float):
    q.require_coprime(l)
    H = 1
    for p in l.primes:
        H = H * d_weight(_Pi_at(Pi, p), l.field(p), "l", l.exponents[p], pt, tol).value
    for p in q.primes:
        H = H * d_weight(_Pi_at(Pi, p), q.field(p), "q", q.exponents[p], pt, tol).value
    return H


def residue_term(
    L: GlobalLValues,
    Pi,
    q: IdealFactorization,
    l: IdealFactorization,
    pt: EvalPoint,
    tol: float = 1e-10,
):
    """Sum of the two residues at it = +-(1 - w).

    Each residue equals Lambda(1+s-w, Pi) Lambda(s+w-1, Pi) / xi_F(3-2w) times the
    weight at pi(1, 1-w): the residue xi*(1) of xi_F(w + it) cancels the
    normalising xi*(1), the (+-i) prefactor cancels the 1/(+-i) from dt, and
    xi_F(2w-1) cancels between numerator and denominator.  Both signs give the
    same representation, hence the factor 2.
    """
    s, w = pt.s, pt.w
    if not (0.5 <= complex(s).real < 1 and 0.5 <= complex(w).real < 1):
        raise RegionViolation(f"({s}, {w}) outside 1/2 <= Re s, Re w < 1")
    H = 1 if q.is_unit() and l.is_unit() else _degenerate_weight(Pi, q, l, pt, tol)
    if _is_central(pt):
        lam_a, lam_b, xi = L.lam(1), L.lam(0), L.xi(2)
    else:
        lam_a, lam_b, xi = L.lam(1 + s - w), L.lam(s + w - 1), L.xi(3 - 2 * w)
    num = 2 * lam_a * lam_b * H
    if isinstance(num, (int, Fraction)) and isinstance(xi, (int, Fraction)):
        return Fraction(num) / xi
    return num / xi
