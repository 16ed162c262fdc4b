from __future__ import annotations

import cmath
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from specrec.errors import CoprimalityViolation, MissingLocalRep, NegativeIndex, PoleAtEvaluationPoint, RamifiedAdjointUnsupported
from specrec.hecke import (
    IdealFactorization,
    gl2_lambda,
    gl2_lambdas,
    gl3_lambda,
    lambda_hat,
    lambda_hat_divisor_sum,
    local_L_adjoint,
    local_L_gl2,
    local_L_gl3,
    local_L_rs,
    rs_series,
    rs_series_check,
)
from specrec.local import LocalField, SatakeGL2, SatakeGL3, dual_gl3
from specrec.series import TruncSeries, series_inv

from conftest import angles, unitary_gl2, unitary_gl3


def test_ideal_basics():
    a = IdealFactorization({2: 3, 5: 1})
    assert a.norm == 40 and a.primes == [2, 5] and a.totient() == 16
    assert IdealFactorization.unit().is_unit() and IdealFactorization.unit().norm == 1
    assert a.coprime(IdealFactorization({3: 2}))
    with pytest.raises(CoprimalityViolation):
        a.require_coprime(IdealFactorization({5: 2}))
    with pytest.raises(ValueError):
        IdealFactorization({2: 0})


def test_gl2_lambda_examples():
    assert gl2_lambda(SatakeGL2.unramified(1), 2) == 3
    assert abs(gl2_lambda(SatakeGL2((1j, -1j), 0), 2) + 1) < 1e-15
    assert gl2_lambda(SatakeGL2.ramified(2), 3) == 0
    assert gl2_lambda(SatakeGL2.ramified(2), 0) == 1
    assert gl2_lambda(SatakeGL2.ramified(1, Fraction(1, 2)), 3) == Fraction(1, 8)
    with pytest.raises(NegativeIndex):
        gl2_lambda(SatakeGL2.unramified(1), -1)


def test_gl3_lambda_examples():
    triv = SatakeGL3.trivial()
    assert gl3_lambda(triv, 0, 0) == 1
    assert gl3_lambda(triv, 1, 0) == 3
    assert gl3_lambda(triv, 1, 1) == 8
    with pytest.raises(NegativeIndex):
        gl3_lambda(triv, 0, -1)


@pytest.mark.parametrize("a", range(6))
@pytest.mark.parametrize("b", range(6))
def test_gl3_trivial_weyl_dimension(a, b):
    assert gl3_lambda(SatakeGL3.trivial(), a, b) == (a + 1) * (b + 1) * (a + b + 2) // 2


def test_gl3_repeated_parameters_fraction():
    rep = SatakeGL3((Fraction(2), Fraction(2), Fraction(1, 4)))
    # s_(1,0,0) = e1
    assert gl3_lambda(rep, 1, 0) == Fraction(17, 4)
    # s_(1,1,0) = e2
    assert gl3_lambda(rep, 0, 1) == 4 + Fraction(1, 2) + Fraction(1, 2)


@given(unitary_gl3())
def test_contragredient_swaps_slots(rep):
    d = dual_gl3(rep)
    for a in range(7):
        for b in range(7):
            assert abs(gl3_lambda(d, a, b) - gl3_lambda(rep, b, a)) < 1e-9


@given(unitary_gl2())
def test_gl2_hecke_relation(rep):
    lam = gl2_lambdas(rep, 10)
    for k in range(1, 10):
        assert abs(lam[1] * lam[k] - lam[k + 1] - lam[k - 1]) < 1e-12


def test_gl2_hecke_relation_exact():
    lam = gl2_lambdas(SatakeGL2.unramified(Fraction(5, 3)), 8)
    assert all(lam[1] * lam[k] == lam[k + 1] + lam[k - 1] for k in range(1, 8))


def test_lambda_hat_examples():
    reps = {2: SatakeGL2.from_hecke_eigenvalue(2)}
    assert lambda_hat(reps, IdealFactorization.unit(), 0.5) == 1
    val = lambda_hat(reps, IdealFactorization({2: 1}), 0.5)
    assert abs(val - (2 - 2**-0.5)) < 1e-14
    rep = SatakeGL2.unramified(Fraction(2, 3))
    l = IdealFactorization({3: 2})
    lam = gl2_lambdas(rep, 2)
    assert lambda_hat({3: rep}, l, 1) == lam[2] - Fraction(1, 3) * lam[1]
    with pytest.raises(MissingLocalRep):
        lambda_hat({}, IdealFactorization({2: 1}), 0)
    with pytest.raises(MissingLocalRep):
        lambda_hat_divisor_sum({}, IdealFactorization({2: 1}), 0)


@given(unitary_gl2(), unitary_gl2(), st.integers(1, 5), st.integers(1, 5), st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False))
def test_lambda_hat_forms_agree(r2, r3, e2, e3, w):
    l = IdealFactorization({2: e2, 3: e3})
    reps = {2: r2, 3: r3}
    assert abs(lambda_hat(reps, l, w) - lambda_hat_divisor_sum(reps, l, w)) < 1e-10


def test_lambda_hat_exact_mode():
    reps = {2: SatakeGL2.unramified(Fraction(3, 2)), 5: SatakeGL2.ramified(1, Fraction(-1, 3))}
    for e in range(1, 6):
        l = IdealFactorization({2: e, 5: 6 - e})
        for w in (-1, 0, 1, 3):
            assert lambda_hat(reps, l, w) == lambda_hat_divisor_sum(reps, l, w)


def test_local_L_examples():
    F = LocalField(3)
    s = 1.3 + 0.4j
    x = 3**-s
    assert local_L_gl2(SatakeGL2.ramified(2), s, F) == 1
    assert abs(local_L_gl2(SatakeGL2.unramified(1), s, F) - (1 - x) ** -2) < 1e-13
    assert abs(local_L_gl2(SatakeGL2.ramified(1, 0.4), s, F) - 1 / (1 - 0.4 * x)) < 1e-13
    assert abs(local_L_gl3(SatakeGL3.trivial(), s, F) - (1 - x) ** -3) < 1e-13
    assert local_L_rs(SatakeGL3.trivial(), SatakeGL2.ramified(3), s, F) == 1
    assert abs(local_L_rs(SatakeGL3.trivial(), SatakeGL2.ramified(1, 0.4), s, F) - (1 - 0.4 * x) ** -3) < 1e-13


def test_local_L_poles():
    with pytest.raises(PoleAtEvaluationPoint):
        local_L_gl3(SatakeGL3.trivial(), 0, LocalField(2))
    with pytest.raises(PoleAtEvaluationPoint):
        local_L_adjoint(SatakeGL2.unramified(1), 0, LocalField(2))


def test_adjoint():
    F = LocalField(5)
    s = 2.0
    x = 5**-s
    assert abs(local_L_adjoint(SatakeGL2.unramified(1), s, F) - (1 - x) ** -3) < 1e-14
    t = 0.37
    rep = SatakeGL2.unramified(5 ** (1j * t))
    expected = 1 / ((1 - 5 ** (2j * t) * x) * (1 - x) * (1 - 5 ** (-2j * t) * x))
    assert abs(local_L_adjoint(rep, s, F) - expected) < 1e-13
    with pytest.raises(RamifiedAdjointUnsupported):
        local_L_adjoint(SatakeGL2.ramified(1, 0.5), s, F)


@given(unitary_gl3(), unitary_gl2())
def test_local_factor_matches_series_expansion(Pi, pi):
    """The eigenvalue series of a GL(3) x GL(2) pair equals the inverted Euler polynomial."""
    order = 20
    F = LocalField(2)
    x = 0.1
    s = -cmath.log(x) / cmath.log(2)
    poly = TruncSeries.constant(1, order)
    for g in Pi.gammas:
        for a in pi.params:
            poly = poly * TruncSeries([1, -g * a] + [0] * (order - 1))
    expansion = series_inv(poly)
    assert abs(expansion(x) - local_L_rs(Pi, pi, s, F)) < 1e-9


def test_rs_series_examples():
    rep = rs_series_check(SatakeGL3.trivial(), SatakeGL2.ramified(2), 10)
    assert rep.exact_match and rep.lhs.coeffs == (1,) + (0,) * 10
    rep = rs_series_check(SatakeGL3.trivial(), SatakeGL2.ramified(1, Fraction(1, 2)), 30)
    assert rep.exact_match
    # hand expansion: coefficients of (1 - a x)^{-3} are C(nu+2, 2) a^nu
    a = Fraction(1, 2)
    assert rs_series(SatakeGL3.trivial(), SatakeGL2.ramified(1, a), 3).coeffs == (1, 3 * a, 6 * a * a, 10 * a**3)


@given(unitary_gl3(), angles, st.sampled_from([2, 3, 5, 7]))
def test_rs_series_random(Pi, phi, q):
    pi = SatakeGL2.ramified(1, q**-0.5 * cmath.exp(1j * phi))
    assert rs_series_check(Pi, pi, 30).max_deviation < 1e-10
