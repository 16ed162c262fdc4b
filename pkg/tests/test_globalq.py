from __future__ import annotations

import math
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from specrec import globalq
from specrec.errors import DeligneViolation, InsufficientCache, ParseError, PoleAtOne, PoleAtZeroOrOne
from specrec.globalq import TauTable


@pytest.fixture(scope="module")
def tau():
    return globalq.tau_table(1200)


def _tau_naive(N):
    """Coefficients of x prod (1 - x^k)^24 by repeated multiplication."""
    poly = [1] + [0] * (N - 1)
    for k in range(1, N):
        for _ in range(24):
            for i in range(N - 1, k - 1, -1):
                poly[i] -= poly[i - k]
    return poly


def test_tau_small_values(tau):
    assert [tau[n] for n in range(1, 8)] == [1, -24, 252, -1472, 4830, -6048, -16744]


def test_tau_matches_naive_product(tau):
    assert list(tau.values[:60]) == _tau_naive(60)


def test_tau_ramanujan_congruence(tau):
    assert all((tau[n] - globalq.sigma(11, n)) % 691 == 0 for n in range(1, 201))


def test_tau_multiplicative(tau):
    for m in range(1, 30):
        for n in range(1, 30):
            if math.gcd(m, n) == 1:
                assert tau[m * n] == tau[m] * tau[n]


def test_tau_table_bounds(tau):
    with pytest.raises(InsufficientCache):
        tau[0]
    with pytest.raises(InsufficientCache):
        tau[tau.N + 1]
    with pytest.raises(ValueError):
        globalq.tau_table(0)


@given(st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=20), st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=20))
def test_kronecker_product_matches_schoolbook(a, b):
    n = min(len(a), len(b))
    naive = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]
    if max(map(abs, a)) == 0 or max(map(abs, b)) == 0:
        return
    assert globalq._poly_mul(a, b, n) == naive


def test_deligne_bound(tau):
    for p in (2, 3, 5, 7, 11, 997):
        a = globalq.delta_satake(p, tau).params[0]
        assert abs(abs(a) - 1) < 1e-12
        assert abs(2 * a.real - tau[p] / p**5.5) < 1e-12
    fake = TauTable((1, 10**6))
    with pytest.raises(DeligneViolation):
        globalq.delta_satake(2, fake)
    with pytest.raises(ValueError):
        globalq.delta_satake(4, tau)


def test_sym2_satake_product_one(tau):
    g = globalq.sym2_satake(13, tau).gammas
    assert abs(g[0] * g[1] * g[2] - 1) < 1e-12


def test_zeta_values():
    assert abs(globalq.zeta(2) - math.pi**2 / 6) < 1e-10
    assert abs(globalq.zeta(4) - math.pi**4 / 90) < 1e-10
    assert abs(globalq.zeta(-1) + 1 / 12) < 1e-10
    assert abs(globalq.zeta(0) + 0.5) < 1e-10
    with pytest.raises(PoleAtOne):
        globalq.zeta(1)


def test_zeta_first_zero():
    assert abs(globalq.zeta(0.5 + 14.134725141734693j)) < 1e-9


def test_xi_values_and_poles():
    assert abs(globalq.xi_completed(2) - math.pi / 6) < 1e-10
    for s in (0, 1):
        with pytest.raises(PoleAtZeroOrOne):
            globalq.xi_completed(s)
    assert abs(globalq.xi_residue_at_one() - 1) < 1e-6


@given(st.floats(0.05, 0.95), st.floats(-20, 20))
def test_xi_functional_equation(re, im):
    s = complex(re, im)
    assert abs(globalq.xi_completed(s) - globalq.xi_completed(1 - s)) < 1e-9


def test_euler_product_vs_dirichlet(tau):
    euler = globalq.truncated_L_gl3(tau, 2, 1000)
    assert euler.certified and euler.last_change < 1e-6
    assert abs(globalq.dirichlet_L_gl3(tau, 2, 1000) - euler.value) < 1e-5
    at1 = globalq.truncated_L_gl3(tau, 1, 1000)
    assert not at1.certified and at1.notes
    with pytest.raises(InsufficientCache):
        globalq.truncated_L_gl3(tau, 2, tau.N + 1)
    with pytest.raises(InsufficientCache):
        globalq.dirichlet_L_gl3(tau, 2, tau.N + 1)


def test_global_lvalues_and_main_term(tau):
    L = globalq.global_lvalues(tau, 500)
    assert L.self_dual
    assert L.lam(0) == L.lam(1)
    m = globalq.corollary_main_term(L, 11)
    assert abs(m.main - 4 * L.lam(1) ** 2 / globalq.xi_completed(2)) < 1e-15
    assert m.error_exponent == Fraction(7, 64) - Fraction(1, 2)
    assert m.weight_prefactor == Fraction(10, 121)


def test_gamma_factor_positive():
    assert globalq.sym2_gamma_factor(1).real > 0 and abs(globalq.sym2_gamma_factor(1).imag) < 1e-15


def test_tau_cache_roundtrip(tmp_path):
    t = globalq.tau_table(50)
    path = tmp_path / "tau.csv"
    globalq.write_tau_cache(path, t)
    first = path.read_bytes()
    globalq.write_tau_cache(path, t)
    assert path.read_bytes() == first
    assert first.decode().splitlines()[:3] == ["1,1", "2,-24", "3,252"]
    assert globalq.read_tau_cache(path) == t


@pytest.mark.parametrize("text", ["1,1\n2\n", "1,1\n3,252\n", "a,b\n"])
def test_tau_cache_rejects_bad_input(tmp_path, text):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    with pytest.raises(ParseError):
        globalq.read_tau_cache(path)
