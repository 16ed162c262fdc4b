"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SpecrecError(Exception):
    """Base class for all errors raised by :mod:`specrec`."""


class ZeroConstantTerm(SpecrecError, ZeroDivisionError):
    pass


class EvaluationFailure(SpecrecError):
    def __init__(self, point, cause):
        self.point = point
        self.cause = cause
        super().__init__(f"evaluation failed at {point!r}: {cause!r}")


class NegativeIndex(SpecrecError, ValueError):
    pass


class MissingLocalRep(SpecrecError, KeyError):
    pass


class PoleAtEvaluationPoint(SpecrecError, ZeroDivisionError):
    pass


class RamifiedAdjointUnsupported(SpecrecError, NotImplementedError):
    pass


class DegenerateAlpha(SpecrecError, ZeroDivisionError):
    """Raised on the locus alpha^2 = 1 where the Gram-Schmidt coefficients blow up."""


class TruncationInsufficient(SpecrecError, ArithmeticError):
    def __init__(self, message, tail_bound=None):
        self.tail_bound = tail_bound
        super().__init__(message)


class CoprimalityViolation(SpecrecError, ValueError):
    pass


class RegionViolation(SpecrecError, ValueError):
    pass


class MissingLabel(SpecrecError, KeyError):
    pass


class DeligneViolation(SpecrecError, ValueError):
    pass


class PoleAtOne(SpecrecError, ZeroDivisionError):
    pass


class PoleAtZeroOrOne(SpecrecError, ZeroDivisionError):
    pass


class UnknownSuite(SpecrecError, ValueError):
    pass


class ParseError(SpecrecError, ValueError):
    pass


class InsufficientCache(SpecrecError, LookupError):
    pass


class TemperednessViolation(SpecrecError, ValueError):
    pass


class TemperednessWarning(UserWarning):
    pass
