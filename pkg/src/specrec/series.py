"""Truncated power series in one formal variable, plus randomized identity testing.

Coefficients are either exact (``int``/``Fraction``) or floating complex.  A
series of order ``N`` stores ``N + 1`` coefficients; binary operations truncate
to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Callable, Sequence

import numpy as np

from .errors import EvaluationFailure, ZeroConstantTerm

__all__ = [
    "TruncSeries",
    "series_add",
    "series_mul",
    "series_inv",
    "IdentityReport",
    "identity_test",
]

_EXACT = (int, Fraction)


def _coerce(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, _EXACT):
        return c
    if isinstance(c, Number):
        return complex(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


@dataclass(frozen=True)
class TruncSeries:
    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, _EXACT) for c in self.coeffs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls([c] + [0] * order)

    @classmethod
    def monomial(cls, c, degree: int, order: int) -> "TruncSeries":
        out = [0] * (order + 1)
        if degree <= order:
            out[degree] = c
        return cls(out)

    @classmethod
    def geometric(cls, ratio, order: int) -> "TruncSeries":
        """sum_k ratio^k x^k, i.e. the expansion of 1/(1 - ratio x)."""
        out, term = [], 1
        for _ in range(order + 1):
            out.append(term)
            term = term * ratio
        return cls(out)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1])

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        return series_add(self, _as_series(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return series_add(self, -_as_series(other, self.order))

    def __rsub__(self, other):
        return series_add(_as_series(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def inv(self) -> "TruncSeries":
        return series_inv(self)

    def __call__(self, x):
        """Horner evaluation of the stored polynomial part."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    def max_deviation(self, other: "TruncSeries") -> float:
        n = min(self.order, other.order)
        return max(abs(complex(self.coeffs[k]) - complex(other.coeffs[k])) for k in range(n + 1))


def _as_series(x, order: int) -> TruncSeries:
    if isinstance(x, TruncSeries):
        return x
    return TruncSeries.constant(x, order)


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    return TruncSeries([a.coeffs[k] + b.coeffs[k] for k in range(n + 1)])


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            acc += ac[i] * bc[k - i]
        out.append(acc)
    return TruncSeries(out)


def series_inv(a: TruncSeries) -> TruncSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroConstantTerm("series has zero constant term")
    inv0 = Fraction(1) / a0 if isinstance(a0, _EXACT) else 1 / a0
    out = [inv0]
    for k in range(1, a.order + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += a.coeffs[i] * out[k - i]
        out.append(-acc * inv0)
    return TruncSeries([_normalize(c) for c in out])


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# -- randomized identity testing ---------------------------------------------


@dataclass
class IdentityReport:
    max_diff: float
    tol: float
    seed: int
    samples: int
    points: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.max_diff < self.tol


def identity_test(
    f: Callable,
    g: Callable,
    domain: Sequence[tuple[complex, complex]],
    samples: int = 20,
    tol: float = 1e-9,
    seed: int = 0,
    exclude: Callable | None = None,
) -> IdentityReport:
    """Compare two evaluators at random points of a complex box.

    ``domain`` lists one ``(lower_corner, upper_corner)`` pair per variable; real
    and imaginary parts are drawn uniformly between the corners.  ``exclude`` is
    an optional predicate marking declared pole loci, which are resampled.
    """
    rng = np.random.default_rng(seed)
    report = IdentityReport(max_diff=0.0, tol=tol, seed=seed, samples=samples)
    drawn = 0
    attempts = 0
    while drawn < samples:
        attempts += 1
        if attempts > 100 * samples:
            raise RuntimeError("could not draw enough points outside the excluded loci")
        point = tuple(
            complex(rng.uniform(complex(lo).real, complex(hi).real), rng.uniform(complex(lo).imag, complex(hi).imag))
            for lo, hi in domain
        )
        if exclude is not None and exclude(*point):
            continue
        drawn += 1
        report.points.append(point)
        try:
            diff = abs(complex(f(*point)) - complex(g(*point)))
        except Exception as exc:  # surfaced per sample, never swallowed silently
            report.failures.append(EvaluationFailure(point, exc))
            continue
        if not np.isfinite(diff):
            report.failures.append(EvaluationFailure(point, FloatingPointError("non-finite difference")))
            continue
        report.max_diff = max(report.max_diff, diff)
    return report
