from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from specrec.errors import EvaluationFailure, ZeroConstantTerm
from specrec.series import TruncSeries, identity_test, series_add, series_inv, series_mul

from conftest import small_complex


def test_add_cancels():
    s = series_add(TruncSeries([1, 1, 0]), TruncSeries([1, -1, 0]))
    assert s.coeffs == (2, 0, 0)


def test_add_zero_and_inverse():
    a = TruncSeries.geometric(Fraction(1, 3), 6)
    assert series_add(a, TruncSeries.constant(0, 6)) == a
    assert series_add(a, -a).coeffs == (0,) * 7


def test_order_is_minimum():
    assert series_add(TruncSeries([1, 2, 3]), TruncSeries([1])).order == 0
    assert series_mul(TruncSeries([1, 2, 3]), TruncSeries([1, 1])).order == 1


def test_telescoping_product():
    N = 12
    prod = series_mul(TruncSeries([1, -1] + [0] * (N - 1)), TruncSeries([1] * (N + 1)))
    assert prod.coeffs == (1,) + (0,) * N


def test_square_of_binomial():
    x = TruncSeries([1, 1, 0, 0])
    assert (x * x).coeffs == (1, 2, 1, 0)


def test_inverse_examples():
    assert series_inv(TruncSeries([1, -1, 0, 0, 0])).coeffs == (1, 1, 1, 1, 1)
    assert series_inv(TruncSeries([1])).coeffs == (1,)
    assert series_inv(TruncSeries([2])).coeffs == (Fraction(1, 2),)


def test_inverse_of_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        series_inv(TruncSeries([0, 1]))


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=20), min_size=1, max_size=9))
def test_inverse_exact(coeffs):
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    a = TruncSeries(coeffs)
    assert series_mul(a, series_inv(a)).coeffs == (1,) + (0,) * a.order


@given(st.lists(small_complex, min_size=2, max_size=9))
def test_inverse_floating(coeffs):
    if abs(coeffs[0]) < 0.5:
        coeffs[0] = 1.0
    a = TruncSeries(coeffs)
    p = series_mul(a, series_inv(a))
    scale = max(1.0, max(abs(c) for c in series_inv(a).coeffs)) * max(abs(c) for c in coeffs)
    assert p.max_deviation(TruncSeries.constant(1, a.order)) <= 1e-12 * scale * len(coeffs)


@given(st.lists(small_complex, min_size=1, max_size=7), st.lists(small_complex, min_size=1, max_size=7), st.lists(small_complex, min_size=1, max_size=7))
def test_mul_commutative_associative(a, b, c):
    A, B, C = TruncSeries(a), TruncSeries(b), TruncSeries(c)
    assert series_mul(A, B).max_deviation(series_mul(B, A)) <= 1e-12
    assert series_mul(series_mul(A, B), C).max_deviation(series_mul(A, series_mul(B, C))) <= 1e-10


def test_identity_test_constant():
    rep = identity_test(lambda w: 1, lambda w: 1, [(0, 1 + 1j)], seed=3)
    assert rep.passed and rep.max_diff == 0 and rep.seed == 3 and len(rep.points) == 20


def test_identity_test_reports_failures():
    def boom(w):
        raise ValueError("nope")

    rep = identity_test(boom, lambda w: 0, [(0, 1)], samples=5)
    assert not rep.passed
    assert len(rep.failures) == 5 and all(isinstance(f, EvaluationFailure) for f in rep.failures)


def test_identity_test_detects_difference():
    rep = identity_test(lambda w: w, lambda w: w + 1e-3, [(0, 1)], samples=4, tol=1e-9)
    assert not rep.passed and rep.max_diff == pytest.approx(1e-3)


def test_identity_test_exclusion_resamples():
    rep = identity_test(lambda w: 1 / (w - 0.5), lambda w: 1 / (w - 0.5), [(0, 1)], exclude=lambda w: abs(w - 0.5) < 0.2)
    assert all(abs(p[0] - 0.5) >= 0.2 for p in rep.points)


def test_horner_evaluation():
    assert TruncSeries([1, 2, 3])(2) == 17
