"""Ramanujan tau, the symmetric square of Delta, and the main term at the central point."""

from __future__ import annotations

from specrec import corollary_main_term, global_lvalues, sigma, tau_table, truncated_L_gl3, xi_completed, xi_residue_at_one, zeta

t = tau_table(2000)
print("tau(1..6) =", [t[n] for n in range(1, 7)])
print("691 congruence holds for n <= 200:", all((t[n] - sigma(11, n)) % 691 == 0 for n in range(1, 201)))
print(f"zeta(2) = {zeta(2).real:.15f}, xi(2) = {xi_completed(2).real:.15f}, residue of xi at 1 = {xi_residue_at_one():.9f}")

for P in (250, 500, 1000, 2000):
    print(f"L(1, sym^2 Delta) over p <= {P}: {truncated_L_gl3(t, 1, P).value.real:.8f}")

L = global_lvalues(t, 2000)
m = corollary_main_term(L, 11)
print(f"\nmain term 4 Lambda(1)Lambda(0)/xi(2) = {m.main.real:.6e}")
print(f"weight prefactor {m.weight_prefactor}, error exponent {m.error_exponent}")
