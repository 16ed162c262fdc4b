"""Orthonormal newform-translate basis: xi coefficients, S_t and the Gram matrix."""

from __future__ import annotations

import numpy as np

from specrec import LocalField, SatakeGL2, e_function, gram_matrix, gs_coeffs, s_sequence

F = LocalField(5)
rep = SatakeGL2.from_hecke_eigenvalue(0.8)
gs = gs_coeffs(rep, F, 4)
print(f"alpha_pi = {gs.alpha_pi:.6f}")
for j in range(5):
    print(f"  xi({j}, .) =", " ".join(f"{complex(gs.coeff(j, k)).real:+.5f}" for k in range(j + 1)))

S = s_sequence(rep, F, 5)
print("S_0..S_5 =", " ".join(f"{complex(v).real:+.6f}" for v in S.values), f"(tail bound {S.tail_bound:.1e})")

G = gram_matrix(rep, F, 4)
print(f"max |G - I| for J = 4: {np.max(np.abs(G - np.eye(5))):.2e}")

w = 0.7 + 1.3j
print("\nE_(j,k2)(w) on the degenerate line, w =", w)
for j in range(4):
    print(f"  j={j}:", " ".join(f"{abs(e_function(F, w, j, k)):.2e}" for k in range(j + 1)))
