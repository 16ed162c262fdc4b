"""Local fields, Satake parameter records and the (s, w) involution."""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from fractions import Fraction

from ._util import prime_power_base, qpow
from .errors import TemperednessViolation, TemperednessWarning

__all__ = [
    "LocalField",
    "SatakeGL2",
    "SatakeGL3",
    "EvalPoint",
    "dual_point",
    "eisenstein_rep",
    "degenerate_eisenstein_rep",
    "dual_gl3",
]

_PRODUCT_TOL = 1e-9


def _close_to_one(z) -> bool:
    if isinstance(z, (int, Fraction)):
        return z == 1
    return abs(z - 1) <= _PRODUCT_TOL * max(1.0, abs(z))


def _inv(z):
    if isinstance(z, (int, Fraction)):
        return Fraction(1) / z
    return 1 / z


@dataclass(frozen=True)
class LocalField:
    """Residue cardinality ``q`` and conductor exponent ``d`` of the additive character."""

    q: int
    d: int = 0

    def __post_init__(self):
        if int(self.q) != self.q or self.q < 2:
            raise ValueError(f"residue cardinality must be an integer >= 2, got {self.q}")
        if prime_power_base(int(self.q)) is None:
            raise ValueError(f"residue cardinality {self.q} is not a prime power")
        if self.d < 0:
            raise ValueError("conductor exponent d must be >= 0")

    @property
    def p(self) -> int:
        return prime_power_base(self.q)

    def pow(self, z):
        return qpow(self.q, z)

    def zeta(self, s) -> complex:
        return 1.0 / (1.0 - qpow(self.q, -s))


def _check_window(params, q, bound, strict, what):
    lo, hi = q ** (-bound), q**bound
    ok = all(lo * (1 - 1e-12) <= abs(complex(g)) <= hi * (1 + 1e-12) for g in params)
    if not ok:
        msg = f"{what} parameters {tuple(params)} leave the window [q^-{bound}, q^{bound}] at q={q}"
        if strict:
            raise TemperednessViolation(msg)
        warnings.warn(msg, TemperednessWarning, stacklevel=3)
    return ok


@dataclass(frozen=True)
class SatakeGL2:
    """Langlands parameters of a generic GL(2) local representation with trivial central character.

    Conductor 0 keeps both parameters, conductor 1 keeps the single parameter
    of its degree-one L-factor, conductor >= 2 keeps none.
    """

    params: tuple
    conductor: int = 0

    def __post_init__(self):
        params = tuple(self.params)
        object.__setattr__(self, "params", params)
        c = self.conductor
        if c < 0:
            raise ValueError("conductor must be >= 0")
        expected = 2 if c == 0 else (1 if c == 1 else 0)
        if len(params) != expected:
            raise ValueError(f"conductor {c} requires {expected} parameters, got {len(params)}")
        if c == 0 and not _close_to_one(params[0] * params[1]):
            raise ValueError(f"unramified parameters must multiply to 1, got {params[0] * params[1]}")

    @classmethod
    def unramified(cls, alpha) -> "SatakeGL2":
        return cls((alpha, _inv(alpha)), 0)

    @classmethod
    def from_hecke_eigenvalue(cls, lam) -> "SatakeGL2":
        """Unramified rep with alpha + 1/alpha = lam (root with |alpha| >= 1 or Im >= 0)."""
        disc = cmath.sqrt(complex(lam) ** 2 - 4)
        alpha = (complex(lam) + disc) / 2
        if abs(alpha) < 1 - 1e-12 or (abs(abs(alpha) - 1) <= 1e-12 and alpha.imag < 0):
            alpha = (complex(lam) - disc) / 2
        return cls.unramified(alpha)

    @classmethod
    def ramified(cls, conductor: int, alpha=None) -> "SatakeGL2":
        if conductor == 1:
            if alpha is None:
                raise ValueError("conductor-1 representations need their Langlands parameter")
            return cls((alpha,), 1)
        return cls((), conductor)

    @property
    def hecke_eigenvalue(self):
        """lambda(1): the sum of the stored parameters."""
        return sum(self.params) if self.params else 0

    @property
    def max_modulus(self) -> float:
        return max((abs(complex(g)) for g in self.params), default=0.0)

    def conj(self) -> "SatakeGL2":
        return SatakeGL2(tuple(complex(g).conjugate() for g in self.params), self.conductor)

    def tempered(self, q: int, vartheta: float) -> bool:
        lo, hi = q ** (-vartheta), q**vartheta
        return all(lo * (1 - 1e-12) <= abs(complex(g)) <= hi * (1 + 1e-12) for g in self.params)

    def check_tempered(self, q: int, vartheta: float, strict: bool = False) -> bool:
        return _check_window(self.params, q, vartheta, strict, "GL(2)")


@dataclass(frozen=True)
class SatakeGL3:
    """Satake parameters of an unramified PGL(3) local component, bounded by ``q^{+-theta}``."""

    gammas: tuple
    theta: float = 0.0

    def __post_init__(self):
        gammas = tuple(self.gammas)
        object.__setattr__(self, "gammas", gammas)
        if len(gammas) != 3:
            raise ValueError("a GL(3) Satake record has exactly three parameters")
        if not self.theta < 0.5:
            raise ValueError("theta must be < 1/2")
        prod = gammas[0] * gammas[1] * gammas[2]
        if not _close_to_one(prod):
            raise ValueError(f"Satake parameters must multiply to 1, got {prod}")

    @classmethod
    def trivial(cls) -> "SatakeGL3":
        return cls((1, 1, 1), 0.0)

    @property
    def max_modulus(self) -> float:
        """max over i of max(|gamma_i|, 1/|gamma_i|)."""
        return max(max(abs(complex(g)), 1 / abs(complex(g))) for g in self.gammas)

    def elementary(self):
        g1, g2, g3 = self.gammas
        return g1 + g2 + g3, g1 * g2 + g1 * g3 + g2 * g3, g1 * g2 * g3

    def tempered(self, q: int) -> bool:
        lo, hi = q ** (-self.theta), q**self.theta
        return all(lo * (1 - 1e-12) <= abs(complex(g)) <= hi * (1 + 1e-12) for g in self.gammas)

    def check_tempered(self, q: int, strict: bool = False) -> bool:
        return _check_window(self.gammas, q, self.theta, strict, "GL(3)")


@dataclass(frozen=True)
class EvalPoint:
    s: complex
    w: complex

    def dual(self) -> "EvalPoint":
        return dual_point(self)

    # region predicates
    def in_spherical_region(self) -> bool:
        """1/2 <= Re s <= Re w < 3/4."""
        s, w = complex(self.s).real, complex(self.w).real
        return 0.5 <= s <= w < 0.75

    def in_holomorphy_region(self) -> bool:
        """1/2 <= Re s, Re w < 1."""
        s, w = complex(self.s).real, complex(self.w).real
        return 0.5 <= s < 1 and 0.5 <= w < 1

    def in_bump_region(self, theta: float) -> bool:
        """Re(3s+w) > 1, Re(s+w) > theta, Re(2s) > theta."""
        s, w = complex(self.s), complex(self.w)
        return (3 * s + w).real > 1 and (s + w).real > theta and (2 * s).real > theta


def dual_point(p: EvalPoint) -> EvalPoint:
    s, w = p.s, p.w
    if all(isinstance(z, (int, Fraction)) for z in (s, w)):
        half = Fraction(1, 2)
        return EvalPoint((1 + w - s) * half, (3 * s + w - 1) * half)
    return EvalPoint((1 + w - s) / 2, (3 * s + w - 1) / 2)


def eisenstein_rep(omega_p, t, F: LocalField) -> SatakeGL2:
    """Unramified principal series pi(omega, it): parameters omega q^{it} and its inverse."""
    if abs(abs(complex(omega_p)) - 1) > 1e-12:
        raise ValueError("omega(varpi) must have modulus 1")
    a = complex(omega_p) * F.pow(1j * t)
    b = complex(omega_p).conjugate() * F.pow(-1j * t)
    return SatakeGL2((a, b), 0)


def degenerate_eisenstein_rep(w, F: LocalField) -> SatakeGL2:
    """The specialization omega = 1, it = 1 - w: parameters q^{1-w}, q^{w-1}."""
    return SatakeGL2((F.pow(1 - w), F.pow(w - 1)), 0)


def dual_gl3(rep: SatakeGL3) -> SatakeGL3:
    return SatakeGL3(tuple(_inv(g) for g in rep.gammas), rep.theta)
