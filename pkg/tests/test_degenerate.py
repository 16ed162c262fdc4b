from __future__ import annotations

import cmath
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from specrec.degenerate import (
    LAMBDA_0,
    LAMBDA_1,
    LAMBDA_1_BAR,
    XI_2,
    GlobalLValues,
    bump_check,
    central_degenerate,
    d_global,
    j_divides_l,
    j_unramified,
    residue_term,
)
from specrec.errors import CoprimalityViolation, MissingLabel, RegionViolation
from specrec.globalq import corollary_main_term
from specrec.hecke import IdealFactorization, gl3_lambda, local_L_gl3
from specrec.local import EvalPoint, LocalField, SatakeGL3, dual_gl3

from conftest import unitary_gl3

half = Fraction(1, 2)
one = IdealFactorization.unit()


def test_bump_trivial_exact():
    rep = bump_check(SatakeGL3.trivial(), 12)
    assert rep.coeff(1, 0) == (3, 3)
    assert rep.coeff(1, 1) == (8, 8)
    assert rep.max_deviation == 0


@given(unitary_gl3())
def test_bump_identity(Pi):
    assert bump_check(Pi, 12).max_deviation < 1e-10


@given(unitary_gl3(), st.sampled_from([2, 3, 5]), st.floats(0.6, 1.5), st.floats(0.6, 1.5))
def test_j_unramified_box_sum(Pi, q, s, w):
    F = LocalField(q)
    pt = EvalPoint(s, w)
    A, B = F.pow(-(s + w)), F.pow(-2 * s)
    box = sum(gl3_lambda(Pi, a, b) * A**a * B**b for a in range(60) for b in range(60))
    assert abs(j_unramified(Pi, F, pt) - box) < 1e-8


def test_j_unramified_conductor_shift():
    Pi = SatakeGL3.trivial()
    pt = EvalPoint(0.7, 0.8)
    a = j_unramified(Pi, LocalField(3, 2), pt)
    b = j_unramified(Pi, LocalField(3), pt)
    assert abs(a - 3 ** (2 * (3 * 0.7 + 0.8 - 2)) * b) < 1e-12


@given(unitary_gl3(), st.sampled_from([2, 3, 5]), st.floats(0.5, 1.0), st.floats(0.5, 1.0))
def test_j_divides_l_plus_slice(Pi, q, s, w):
    """The a = 0 slice plus the a >= 1 part rebuilds the full local factor."""
    F = LocalField(q)
    pt = EvalPoint(s, w)
    jl = j_divides_l(Pi, F, 1, pt)
    slice0 = local_L_gl3(dual_gl3(Pi), 2 * s, F)
    assert abs(j_unramified(Pi, F, pt) - slice0 - jl.value) <= jl.tail_bound + 1e-12


def test_j_divides_l_rejects_zero_exponent():
    with pytest.raises(ValueError):
        j_divides_l(SatakeGL3.trivial(), LocalField(2), 0, EvalPoint(0.6, 0.6))


def test_d_global_product_structure():
    Pi = SatakeGL3((cmath.exp(0.4j), cmath.exp(-1.1j), cmath.exp(0.7j)))
    pt = EvalPoint(0.9, 0.8)
    base = d_global(Pi, one, pt, 50)
    with_l = d_global(Pi, IdealFactorization({53: 1}), pt, 50)
    F = LocalField(53)
    assert abs(with_l.value / base.value - j_divides_l(Pi, F, 1, pt).value) < 1e-9
    assert not base.certified and base.tail_estimate > 0
    assert [p for p, _ in base.trace][:3] == [2, 3, 5]


def test_d_global_region():
    with pytest.raises(RegionViolation):
        d_global(SatakeGL3.trivial(), one, EvalPoint(0.1, 0.1), 10)


def test_lvalues_labels():
    L = GlobalLValues(self_dual=False)
    L.set(LAMBDA_1, 2)
    with pytest.raises(MissingLabel):
        L.get(LAMBDA_0)
    L.self_dual = True
    L.set(LAMBDA_1_BAR, 3)
    assert L.get(LAMBDA_0) == 3
    assert L.provenance[LAMBDA_1] == "user-supplied"
    with pytest.raises(MissingLabel):
        L.xi(2)
    with pytest.raises(MissingLabel):
        L.lam(0.3)


def test_central_consistency_exact():
    c, z = Fraction(7, 3), Fraction(5, 11)
    L = GlobalLValues.placeholder(c, z)
    r = residue_term(L, SatakeGL3.trivial(), one, one, EvalPoint(half, half))
    d = central_degenerate(L)
    assert r == d == 2 * c * c / z
    assert corollary_main_term(L, 11).main == 4 * c * c / z


@given(st.fractions(min_value=Fraction(1, 10), max_value=10), st.fractions(min_value=Fraction(1, 10), max_value=10), st.integers(1, 6))
def test_central_discriminant_scaling(c, z, r):
    base = central_degenerate(GlobalLValues.placeholder(c, z))
    scaled = central_degenerate(GlobalLValues.placeholder(c, z, d_F=r * r))
    assert scaled == r**3 * base


def test_residue_region_and_coprimality():
    L = GlobalLValues.placeholder(1, 1)
    with pytest.raises(RegionViolation):
        residue_term(L, SatakeGL3.trivial(), one, one, EvalPoint(0.4, 0.5))
    with pytest.raises(CoprimalityViolation):
        residue_term(L, SatakeGL3.trivial(), IdealFactorization({2: 1}), IdealFactorization({2: 1}), EvalPoint(half, half))


def test_residue_generic_limit():
    L = GlobalLValues.placeholder(1.3, 0.7)
    L.Lambda_Pi = lambda s: 1.3 * cmath.exp((s - 1) * s)
    L.xi_F = lambda s: 0.7 * cmath.exp(s - 2)
    near = residue_term(L, SatakeGL3.trivial(), one, one, EvalPoint(0.5 + 1e-7, 0.5 + 1e-7))
    assert abs(near - central_degenerate(L)) < 1e-5


def test_residue_with_level_uses_degenerate_weights():
    L = GlobalLValues.placeholder(Fraction(2), Fraction(3))
    l = IdealFactorization({5: 1})
    r = residue_term(L, SatakeGL3.trivial(), one, l, EvalPoint(half, half))
    # the l-weight on the degenerate line is 1 at w = 1/2 for m = 1
    assert abs(complex(r) - float(2 * 4 / Fraction(3))) < 1e-12
    assert XI_2 in L.values
