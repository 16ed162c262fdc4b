"""Local weights, degenerate terms and residue constants for a GL(3) x GL(2) spectral reciprocity."""

from __future__ import annotations

from .casselman import GSData, SSequence, e_function, gram_matrix, gs_coeffs, s_defining_series, s_sequence
from .degenerate import (
    BumpReport,
    DegenerateReport,
    GlobalLValues,
    bump_check,
    central_degenerate,
    d_global,
    j_divides_l,
    j_unramified,
    residue_term,
)
from .errors import *  # noqa: F401,F403
from .globalq import (
    TauTable,
    corollary_main_term,
    delta_satake,
    dirichlet_L_gl3,
    global_lvalues,
    read_tau_cache,
    sigma,
    sym2_satake,
    tau_table,
    truncated_L_gl3,
    write_tau_cache,
    xi_completed,
    xi_residue_at_one,
    zeta,
)
from .hecke import (
    IdealFactorization,
    gl2_lambda,
    gl2_lambdas,
    gl3_lambda,
    lambda_hat,
    lambda_hat_divisor_sum,
    local_L_adjoint,
    local_L_gl2,
    local_L_gl2xgl2,
    local_L_gl3,
    local_L_rs,
    rs_series_check,
)
from .local import (
    EvalPoint,
    LocalField,
    SatakeGL2,
    SatakeGL3,
    degenerate_eisenstein_rep,
    dual_gl3,
    dual_point,
    eisenstein_rep,
)
from .series import TruncSeries, identity_test, series_add, series_inv, series_mul
from .weights import (
    GlobalWeight,
    WeightValue,
    d_weight,
    h_archimedean,
    h_check,
    h_divides_l,
    h_divides_q,
    h_divides_q_oracle,
    h_global,
    h_unramified,
)

__version__ = "0.1.0"
