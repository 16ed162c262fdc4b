"""Gram-Schmidt coefficients for the translates W_k of a GL(2) newvector.

``W_k`` is the newvector translated by diag(1, varpi^k).  The inner products
<W_k1, W_k2> = q^{-|k2-k1|/2} S_|k2-k1| follow a two-term recursion, and the
triangular table ``xi`` turns ``W_0, ..., W_J`` into an orthonormal family.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._util import cutoff_for, poly_geom_tail
from .errors import DegenerateAlpha, TruncationInsufficient
from .hecke import gl2_lambdas, local_L_gl2xgl2
from .local import LocalField, SatakeGL2, degenerate_eisenstein_rep

__all__ = ["GSData", "gs_coeffs", "SSequence", "s_sequence", "s_defining_series", "gram_matrix", "e_function"]

ALPHA_POLE_TOL = 1e-8


@dataclass(frozen=True)
class GSData:
    alpha_pi: complex
    delta_pi: int
    lam: complex
    xi: tuple  # xi[j][k] for 0 <= k <= j
    norm_W0: float
    q: int

    @property
    def J(self) -> int:
        return len(self.xi) - 1

    def coeff(self, j: int, k: int):
        if k < 0 or k > j:
            return 0
        return self.xi[j][k]


def gs_coeffs(rep: SatakeGL2, F: LocalField, J: int) -> GSData:
    q = F.q
    delta = 1 if rep.conductor == 0 else 0
    lam = rep.hecke_eigenvalue
    alpha = lam / (math.sqrt(q) * (1 + delta / q))
    one_minus = 1 - alpha * alpha
    if J >= 1 and abs(one_minus) < ALPHA_POLE_TOL:
        raise DegenerateAlpha(f"alpha^2 = {alpha * alpha} is on the pole locus alpha^2 = 1")
    rows = [(1,)]
    if J >= 1:
        x11 = 1 / cmath.sqrt(one_minus)
        rows.append((-alpha * math.sqrt(q) * x11, x11))
    if J >= 2:
        xjj = 1 / (cmath.sqrt(one_minus) * math.sqrt(1 - delta / q**2))
        for j in range(2, J + 1):
            row = [0] * (j + 1)
            row[j] = xjj
            row[j - 1] = -lam * xjj
            row[j - 2] = delta * xjj
            rows.append(tuple(row))
    norm = 1.0 if delta else F.zeta(2).real
    return GSData(alpha, delta, lam, tuple(rows), norm, q)


@dataclass(frozen=True)
class SSequence:
    values: tuple
    tail_bound: float
    truncation: int

    def __getitem__(self, t):
        return self.values[t]

    def __len__(self):
        return len(self.values)


def _s_prefactor(rep: SatakeGL2, F: LocalField):
    return F.zeta(2) / local_L_gl2xgl2(rep, rep.conj(), 1, F)


def _lambda_growth(rep: SatakeGL2) -> tuple[float, int]:
    """(r, deg) with |lambda(nu)| <= (nu+1)^deg r^nu."""
    if rep.conductor >= 2:
        return 0.0, 0
    return rep.max_modulus, 1 if rep.conductor == 0 else 0


def s_defining_series(rep: SatakeGL2, F: LocalField, t: int, N: int):
    """Direct truncated evaluation of S_t (no recursion); used as an oracle."""
    lam = gl2_lambdas(rep, N + t)
    acc = 0
    for nu in range(N + 1):
        acc += complex(lam[nu]).conjugate() * lam[nu + t] * F.q ** (-nu)
    return _s_prefactor(rep, F) * acc


def s_sequence(rep: SatakeGL2, F: LocalField, T: int, trunc: int | None = None, tol: float = 1e-12) -> SSequence:
    """S_0 from its defining series, then S_1 = alpha q^{1/2} S_0 and the Hecke recursion."""
    r, deg = _lambda_growth(rep)
    rho = r * r / F.q
    pref = abs(_s_prefactor(rep, F))
    if trunc is None:
        trunc = cutoff_for(1, 2 * deg, rho, tol, scale=pref)
        if trunc < 0:
            raise TruncationInsufficient(f"defining series of S_0 diverges (ratio {rho:.3g})", math.inf)
    tail = pref * poly_geom_tail(1, 2 * deg, rho, trunc + 1) if rho > 0 else 0.0
    if tail >= tol:
        raise TruncationInsufficient(f"tail bound {tail:.3g} exceeds {tol:.3g} at truncation {trunc}", tail)
    S0 = s_defining_series(rep, F, 0, trunc)
    gs = gs_coeffs(rep, F, 0)
    delta = gs.delta_pi
    out = [S0]
    if T >= 1:
        out.append(gs.alpha_pi * math.sqrt(F.q) * S0)
    lam = rep.hecke_eigenvalue
    for t in range(2, T + 1):
        out.append(lam * out[t - 1] - delta * out[t - 2])
    return SSequence(tuple(out), tail, trunc)


def gram_matrix(rep: SatakeGL2, F: LocalField, J: int) -> np.ndarray:
    """Matrix of <W~_i, W~_j> for 0 <= i, j <= J, from the bilinear expansion of the W~_j."""
    gs = gs_coeffs(rep, F, J)
    S = s_sequence(rep, F, J)
    q = F.q
    inner = np.empty((J + 1, J + 1), dtype=complex)
    for k1 in range(J + 1):
        for k2 in range(J + 1):
            t = abs(k2 - k1)
            v = q ** (-t / 2) * complex(S[t])
            inner[k1, k2] = v if k2 >= k1 else v.conjugate()
    # row j of C holds the coefficients of W~_j on W_0..W_J
    C = np.zeros((J + 1, J + 1), dtype=complex)
    for j in range(J + 1):
        for k in range(j + 1):
            C[j, k] = complex(gs.coeff(j, k)) * q ** ((k - j) / 2)
    return (C @ inner @ C.conj().T) / gs.norm_W0


def e_function(F: LocalField, w, j: int, k2: int):
    """xi(j,k2) * sum_{k1<=j} xi(j,k1) q^{k1(1-w)} on the degenerate specialization at w."""
    rep = degenerate_eisenstein_rep(w, F)
    gs = gs_coeffs(rep, F, j)
    acc = 0
    for k1 in range(j + 1):
        acc += gs.coeff(j, k1) * F.pow(k1 * (1 - w))
    return gs.coeff(j, k2) * acc
