"""Local weight functions H_v and their global product.

Three regimes: primes not dividing ``q * l`` (weight 1), primes dividing ``l``
(a two-term expression in Hecke eigenvalues) and primes dividing ``q`` (a finite
combination of Gram-Schmidt coefficients against GL(3) x GL(2) series).

At primes dividing ``q`` the inner nu_2-series, divided by L(s, Pi x pi), is a
polynomial in q^{-s} of degree below 3 * (number of GL(2) parameters); it is
evaluated exactly, so only the nu_1-series of the d_2 = 0 block is truncated.
``h_divides_q_oracle`` evaluates the same quantity through the un-collapsed
triple series instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from ._util import poly_geom_tail, rounding_bound, vol_congruence
from .casselman import gs_coeffs
from .errors import PoleAtEvaluationPoint, RegionViolation, TruncationInsufficient
from .hecke import (
    IdealFactorization,
    _gl3_lambda_magnitude,
    gl2_lambdas,
    gl3_lambda,
    local_L_gl2,
    local_L_rs,
)
from .local import EvalPoint, LocalField, SatakeGL2, SatakeGL3, degenerate_eisenstein_rep, dual_point

__all__ = [
    "WeightValue",
    "h_unramified",
    "h_archimedean",
    "h_divides_l",
    "h_divides_q",
    "h_divides_q_oracle",
    "d_weight",
    "GlobalWeight",
    "h_global",
    "h_check",
]

DEFAULT_TOL = 1e-10
_POLE_GUARD = 1e-6
_LIMIT_STEP = 1e-4


@dataclass(frozen=True)
class WeightValue:
    value: complex
    tail_bound: float = 0.0
    truncation: int = 0

    def __complex__(self):
        return complex(self.value)


def h_unramified() -> int:
    return 1


def h_archimedean(spherical: bool) -> int:
    """Weight at an archimedean place for the spherical kernel vector."""
    return 1 if spherical else 0


def h_divides_l(rep: SatakeGL2, F: LocalField, m: int, w):
    if m < 1:
        raise ValueError("exponent m must be >= 1")
    if rep.conductor >= 1:
        return 0
    lam = gl2_lambdas(rep, m)
    return F.pow(-m * w) * (lam[m] - lam[m - 1] * F.pow(-w))


# -- closed-form inner sums ------------------------------------------------------


def _poly_from_roots(roots):
    """Coefficients of prod (1 - r X), lowest degree first."""
    coeffs = [1.0 + 0j]
    for r in roots:
        nxt = coeffs + [0j]
        for i in range(len(coeffs)):
            nxt[i + 1] -= r * coeffs[i]
        coeffs = nxt
    return coeffs


class _InnerSums:
    """sum_{nu2 >= 0} lambda_Pi(nu2 + k2, b) lambda*_pi(nu2) X^nu2 / L(s, Pi x pi), in closed form."""

    def __init__(self, Pi: SatakeGL3, pi: SatakeGL2, pi_star: SatakeGL2, X):
        self.Pi = Pi
        self.X = X
        self.absX = abs(X)
        self.R = Pi.max_modulus
        self.D = 3 * len(pi.params) if pi.params else 1
        self.lam_star = gl2_lambdas(pi_star, self.D)
        self.den_star = _poly_from_roots([g * a for g in Pi.gammas for a in pi_star.params])
        if pi_star.params == pi.params:
            self.ratio = 1.0
        else:
            den = _poly_from_roots([g * a for g in Pi.gammas for a in pi.params])
            num = sum(c * X**i for i, c in enumerate(den))
            dstar = sum(c * X**i for i, c in enumerate(self.den_star))
            if abs(dstar) < 1e-14:
                raise PoleAtEvaluationPoint("conjugated Rankin-Selberg factor has a pole at this s")
            self.ratio = num / dstar
        # |inner(k2, b)| <= K[k2] (b+1)^2 R^b
        self._growth = {}

    def value(self, k2: int, b: int):
        D, X = self.D, self.X
        c = [gl3_lambda(self.Pi, nu + k2, b) * self.lam_star[nu] for nu in range(D)]
        cmag = [_gl3_lambda_magnitude(self.Pi, nu + k2, b) * abs(self.lam_star[nu]) for nu in range(D)]
        val = 0j
        mag = 0.0
        xp = 1.0
        for i in range(D):
            Pi_ = 0j
            Pm = 0.0
            for nu in range(i + 1):
                Pi_ += c[nu] * self.den_star[i - nu]
                Pm += cmag[nu] * abs(self.den_star[i - nu])
            val += Pi_ * xp
            mag += Pm * abs(xp)
            xp *= X
        return val * self.ratio, mag * abs(self.ratio)

    def growth(self, k2: int) -> float:
        if k2 not in self._growth:
            R = self.R
            K = 0.0
            for i in range(self.D):
                inner = 0.0
                for nu in range(i + 1):
                    inner += (nu + k2 + 1) ** 2 * R ** (nu + k2) * abs(self.lam_star[nu]) * abs(self.den_star[i - nu])
                K += inner * self.absX**i
            self._growth[k2] = K * abs(self.ratio)
        return self._growth[k2]


def h_divides_q(
    Pi: SatakeGL3,
    pi: SatakeGL2,
    F: LocalField,
    n: int,
    pt: EvalPoint,
    tol: float = DEFAULT_TOL,
    conjugate: bool = True,
) -> WeightValue:
    """Local weight at a prime with q-exponent n >= 1.

    ``conjugate`` pairs against the complex conjugate of the orthonormal vector,
    i.e. conj(xi(j, k2)) conj(lambda_pi(nu2)); for unitary data with trivial
    central character everything but lambda_pi is real.  It must be off when the
    weight is continued analytically to non-unitary parameters.
    """
    if n < 1:
        raise ValueError("exponent n must be >= 1")
    n0 = pi.conductor
    if n0 > n:
        return WeightValue(0, 0.0, 0)
    q = F.q
    s, w = pt.s, pt.w
    gs = gs_coeffs(pi, F, n - n0)
    pi_star = pi.conj() if conjugate else pi
    X = F.pow(-s)
    Y = F.pow(-2 * s)
    inner = _InnerSums(Pi, pi, pi_star, X)

    total = 0j
    mag = 0.0
    tail = 0.0
    trunc = 0
    nterms = 0
    for d1 in range(n + 1):
        d2 = n - d1
        vol = vol_congruence(q, d2)
        for j in range(0, d2 - n0 + 1):
            # E_{j,k2} = xi(j,k2) sum_k1 xi(j,k1) q^{k1(1-w)}
            row_sum = sum(gs.coeff(j, k1) * F.pow(k1 * (1 - w)) for k1 in range(j + 1))
            for k2 in range(j + 1):
                xk2 = gs.coeff(j, k2)
                if conjugate:
                    xk2 = complex(xk2).conjugate()
                if xk2 == 0:
                    continue
                A = vol * q ** (-j) * xk2 * row_sum * F.pow(k2 * (1 - s)) * F.pow(-2 * d1 * s) / gs.norm_W0
                if d2 > 0:
                    v, m = inner.value(k2, d1)
                    total += A * v
                    mag += abs(A) * m
                    nterms += 1
                    continue
                # d2 = 0: nu1 runs over all of N
                rho = inner.R * abs(Y)
                scale = abs(A) * inner.growth(k2) * inner.R**d1
                N1 = 0
                while scale * poly_geom_tail(d1 + 1, 2, rho, N1 + 1) >= tol / 4:
                    N1 = N1 * 2 + 8
                    if N1 > 20000:
                        raise TruncationInsufficient(
                            f"nu1-series ratio {rho:.4g} too close to 1", scale * poly_geom_tail(d1 + 1, 2, rho, N1 + 1)
                        )
                yp = 1.0
                for nu1 in range(N1 + 1):
                    v, m = inner.value(k2, d1 + nu1)
                    total += A * yp * v
                    mag += abs(A * yp) * m
                    yp *= Y
                nterms += N1 + 1
                tail += scale * poly_geom_tail(d1 + 1, 2, rho, N1 + 1)
                trunc = max(trunc, N1)
    bound = tail + rounding_bound(mag, nterms, depth=inner.D * inner.D + 32)
    return WeightValue(total, bound, trunc)


# -- oracle: the un-collapsed pipeline -------------------------------------------


def h_divides_q_oracle(
    Pi: SatakeGL3,
    pi: SatakeGL2,
    F: LocalField,
    n: int,
    pt: EvalPoint,
    tol: float = DEFAULT_TOL,
    conjugate: bool = True,
) -> WeightValue:
    """Same weight, summed as the triple series over (nu1, nu2, mu) before any collapse.

    Only valid where every series converges absolutely: |gamma| r q^{-Re s} < 1
    and r q^{-Re w} < 1, with r the largest GL(2) parameter modulus.
    """
    if n < 1:
        raise ValueError("exponent n must be >= 1")
    n0 = pi.conductor
    if n0 > n:
        return WeightValue(0, 0.0, 0)
    q, d = F.q, F.d
    s, w = pt.s, pt.w
    sig, om = complex(s).real, complex(w).real
    gs = gs_coeffs(pi, F, n - n0)
    c0 = gs.norm_W0 ** -0.5
    R = Pi.max_modulus
    r = pi.max_modulus
    deg = 1 if pi.conductor == 0 else 0
    finite = r == 0  # lambda_pi supported at nu = 0

    rho2 = R * r * q ** (-sig)
    rho_mu = r * q ** (-om)
    rho1 = R * q ** (-2 * sig)
    if not finite and (rho2 >= 1 or rho_mu >= 1):
        raise TruncationInsufficient("oracle series do not converge at this point", math.inf)
    if rho1 >= 1:
        raise TruncationInsufficient("nu1-series does not converge at this point", math.inf)

    def B(j):
        if finite:
            return 0.0
        return abs(c0) * sum(abs(gs.coeff(j, k)) * q ** (k - j / 2) * r ** (-k) for k in range(j + 1))

    outer = F.pow(d * (2 - s - w)) * 1.0 / (local_L_rs(Pi, pi, s, F) * local_L_gl2(pi, w, F))
    pref_I = F.pow(d * (s - 1.5))
    pref_psi = F.pow(d * (w - 0.5))
    J = n - n0
    Bmax = max(B(j) for j in range(J + 1))

    # common truncation N for nu2 and mu, N1 extra terms for the nu1-tail
    def bound_for(N, N1):
        if finite:
            e2 = emu = 0.0
        else:
            e2 = Bmax * poly_geom_tail(1, 2 + deg, rho2, N + 1)
            emu = Bmax * poly_geom_tail(1, deg, rho_mu, N + 1)
        full2 = (Bmax + abs(c0) * 4) * poly_geom_tail(1, 2 + deg, rho2, 0) if not finite else 0.0
        return e2, emu, full2, poly_geom_tail(1 + n, 2, rho1, N1 + 1)

    N = max(J + 2, 16)
    N1 = 16
    scale_guess = abs(outer) * 10 * (1 + Bmax) ** 2 * (1 + R) ** (2 * n + 4)
    while True:
        e2, emu, full2, t1 = bound_for(N, N1)
        if scale_guess * (e2 + emu) < tol / 8 and scale_guess * full2 * t1 < tol / 8:
            break
        if scale_guess * (e2 + emu) >= tol / 8:
            N *= 2
        else:
            N1 *= 2
        if N > 1 << 14 or N1 > 1 << 14:
            raise TruncationInsufficient("oracle truncation would exceed 16384 terms", math.inf)
    if finite:
        N = max(J, 0)

    def evaluate(N, N1):
        lam = gl2_lambdas(pi, N)

        def lam_j(j):
            out = []
            for nu in range(N + 1):
                acc = 0
                for k in range(min(j, nu) + 1):
                    acc += gs.coeff(j, k) * q ** (k - j / 2) * lam[nu - k]
                out.append(c0 * acc)
            return out

        X = F.pow(-s)
        xw = F.pow(-w)
        total = 0j
        err = 0.0
        mag = 0.0
        for d1 in range(n + 1):
            d2 = n - d1
            vol = vol_congruence(q, d2)
            for j in range(0, d2 - n0 + 1):
                lj = lam_j(j)
                ljs = [complex(v).conjugate() for v in lj] if conjugate else lj
                Bj = B(j)
                psi = 0j
                psi_mag = 0.0
                xp = 1.0
                for mu in range(N + 1):
                    psi += lj[mu] * xp
                    psi_mag += abs(lj[mu] * xp)
                    xp *= xw
                psi *= pref_psi
                e_psi = abs(pref_psi) * (0.0 if finite else Bj * poly_geom_tail(1, deg, rho_mu, N + 1))

                nu1s = [d1] if d2 > 0 else range(n, n + N1 + 1)
                acc = 0j
                e_acc = 0.0
                acc_mag = 0.0
                for nu1 in nu1s:
                    I = 0j
                    I_mag = 0.0
                    xp = 1.0
                    for nu2 in range(N + 1):
                        t = gl3_lambda(Pi, nu2, nu1) * ljs[nu2] * xp
                        I += t
                        I_mag += _gl3_lambda_magnitude(Pi, nu2, nu1) * abs(ljs[nu2] * xp)
                        xp *= X
                    f = pref_I * q ** (-nu1) * F.pow(-2 * nu1 * (s - 0.5))
                    acc += f * I
                    acc_mag += abs(f) * I_mag
                    if not finite:
                        e_acc += (
                            abs(f) * (nu1 + 1) ** 2 * R**nu1 * Bj * poly_geom_tail(1, 2 + deg, rho2, N + 1)
                        )
                if d2 == 0:
                    # nu1 > n + N1: |q^{-2 nu1 (s-1/2)} I(nu1, 0)| <= |pref_I| K (nu1+1)^2 (R q^{-2 sig})^nu1
                    K = (Bj if not finite else abs(c0)) * poly_geom_tail(1, 2 + deg, rho2, 0)
                    e_acc += abs(pref_I) * K * poly_geom_tail(1, 2, rho1, n + N1 + 1)
                total += vol * psi * acc
                err += vol * (abs(psi) * e_acc + e_psi * (abs(acc) + e_acc))
                mag += vol * (psi_mag * abs(pref_psi)) * acc_mag
        value = outer * total
        bound = abs(outer) * err + rounding_bound(abs(outer) * mag, 2 * N + N1 + 2 * n, depth=4 * J + 32)
        return value, bound

    value, bound = evaluate(N, N1)
    while bound >= tol and not finite and N < 1 << 12:
        value2, bound2 = evaluate(2 * N, 2 * N1)
        if bound2 >= bound / 2:
            break  # rounding-limited: more terms no longer help
        N, N1, value, bound = 2 * N, 2 * N1, value2, bound2
    if bound >= tol:
        raise TruncationInsufficient(f"oracle tail bound {bound:.3g} exceeds {tol:.3g}", bound)
    return WeightValue(value, bound, N)


# -- degenerate specialization ----------------------------------------------------


def _degenerate_alpha_sq(F: LocalField, w):
    lam = F.pow(1 - w) + F.pow(w - 1)
    a = lam / (math.sqrt(F.q) * (1 + 1 / F.q))
    return a * a


def d_weight(
    Pi: SatakeGL3,
    F: LocalField,
    role: str | None,
    exponent: int,
    pt: EvalPoint,
    tol: float = DEFAULT_TOL,
    check_region: bool = True,
) -> WeightValue:
    """Local weight on the degenerate Eisenstein specialization it = 1 - w.

    ``role`` is ``"q"`` for a prime dividing q, ``"l"`` for a prime dividing l,
    ``None`` otherwise.  Near the removable singularity alpha^2 = 1 the value is
    the Richardson-extrapolated symmetric limit in w; the reported bound then
    adds the difference between two extrapolation scales (an estimate).
    """
    s, w = complex(pt.s), complex(pt.w)
    if check_region and not (0.5 <= s.real < 1 and 0.5 <= w.real < 1):
        raise RegionViolation(f"({s}, {w}) lies outside 1/2 <= Re s, Re w < 1")
    if role is None:
        return WeightValue(1, 0.0, 0)
    if role == "l":
        rep = degenerate_eisenstein_rep(w, F)
        return WeightValue(h_divides_l(rep, F, exponent, w), 0.0, 0)
    if role != "q":
        raise ValueError(f"role must be 'q', 'l' or None, got {role!r}")

    def at(wv):
        rep = degenerate_eisenstein_rep(wv, F)
        return h_divides_q(Pi, rep, F, exponent, EvalPoint(s, wv), tol / 4, conjugate=False)

    if abs(1 - _degenerate_alpha_sq(F, w)) >= _POLE_GUARD:
        return at(w)

    def sym(h):
        a, b = at(w + h), at(w - h)
        return (a.value + b.value) / 2, max(a.tail_bound, b.tail_bound), max(a.truncation, b.truncation)

    h = _LIMIT_STEP
    a1, t1, n1 = sym(h)
    a2, t2, _ = sym(2 * h)
    a4, _, _ = sym(4 * h)
    r1 = (4 * a1 - a2) / 3
    r2 = (4 * a2 - a4) / 3
    return WeightValue(r1, t1 + t2 + abs(r1 - r2), n1)


# -- global product --------------------------------------------------------------


@dataclass
class GlobalWeight:
    value: complex
    tail_bound: float
    delta_infinity: int
    lambda_hat_term: complex  # lambda_hat(l, w) / N(l)^w
    phi_term: float  # phi(N q) / N(q)^2
    h_q: complex
    local: dict = field(default_factory=dict)

    def __complex__(self):
        return complex(self.value)


def _combine(vals):
    """Product with a first-order-exact error bound: prod(|v|+e) - prod|v|."""
    value = 1
    upper = 1.0
    base = 1.0
    for v, e in vals:
        value = value * v
        upper *= abs(v) + e
        base *= abs(v)
    return value, upper - base


def h_global(
    Pi,
    pi_data: Mapping[int, SatakeGL2],
    q: IdealFactorization,
    l: IdealFactorization,
    pt: EvalPoint,
    tol: float = DEFAULT_TOL,
    delta_infinity: bool = True,
    conjugate: bool = True,
) -> GlobalWeight:
    """Product of the local weights over all places.

    ``Pi`` is a single SatakeGL3 (used at every prime) or a map prime -> SatakeGL3.
    Primes of ``pi_data`` outside q * l where pi is ramified force the weight to 0.
    """
    from .errors import MissingLocalRep

    q.require_coprime(l)

    def Pi_at(p):
        if isinstance(Pi, SatakeGL3):
            return Pi
        if p not in Pi:
            raise MissingLocalRep(f"no GL(3) data at {p}")
        return Pi[p]

    def pi_at(p):
        if p not in pi_data:
            raise MissingLocalRep(f"no GL(2) data at {p}")
        return pi_data[p]

    local = {}
    for p in l.primes:
        local[p] = WeightValue(h_divides_l(pi_at(p), l.field(p), l.exponents[p], pt.w), 0.0, 0)
    for p in q.primes:
        local[p] = h_divides_q(Pi_at(p), pi_at(p), q.field(p), q.exponents[p], pt, tol / max(1, len(q.primes)), conjugate)
    unram_ok = all(rep.conductor == 0 for p, rep in pi_data.items() if p not in local)
    d_inf = 1 if delta_infinity else 0

    lam_part, _ = _combine([(local[p].value, 0.0) for p in l.primes])
    q_part, _ = _combine([(local[p].value, local[p].tail_bound) for p in q.primes])
    value, bound = _combine([(v.value, v.tail_bound) for v in local.values()])
    if not unram_ok or not d_inf:
        value, bound = 0, 0.0
    phi_term = q.totient() / q.norm**2
    return GlobalWeight(
        value=value,
        tail_bound=bound,
        delta_infinity=d_inf,
        lambda_hat_term=lam_part,
        phi_term=phi_term,
        h_q=q_part / phi_term,
        local=local,
    )


def h_check(Pi, pi_data, q: IdealFactorization, l: IdealFactorization, pt: EvalPoint, **kw) -> GlobalWeight:
    """Transformed weight: the same product with (q, l, s, w) -> (l, q, s', w')."""
    return h_global(Pi, pi_data, l, q, dual_point(pt), **kw)
