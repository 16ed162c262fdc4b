"""Local weights at primes of q and l, checked against the closed forms."""

from __future__ import annotations

from specrec import EvalPoint, IdealFactorization, LocalField, SatakeGL2, SatakeGL3, h_divides_q, h_divides_q_oracle, h_global

Pi = SatakeGL3((1j, -1j, 1))
pt = EvalPoint(0.55 + 0.4j, 0.65 - 0.1j)
for q in (2, 3, 5):
    F = LocalField(q)
    for n in (1, 2):
        pi = SatakeGL2.ramified(n, -(q**-0.5)) if n == 1 else SatakeGL2.ramified(2)
        h = h_divides_q(Pi, pi, F, n, pt, conjugate=False)
        target = (q**n - q ** (n - 1)) / q ** (2 * n)
        print(f"q={q} n={n}: H = {h.value.real:.12f}  phi(q^n)/q^2n = {target:.12f}  bound {h.tail_bound:.1e}")

F = LocalField(3)
pi = SatakeGL2.from_hecke_eigenvalue(0.4)
a = h_divides_q(Pi, pi, F, 2, pt)
b = h_divides_q_oracle(Pi, pi, F, 2, pt, 1e-9)
print(f"\nunramified pi at n=2: collapsed {a.value:.12f}, triple series {b.value:.12f}")

data = {2: SatakeGL2.ramified(1, -(2**-0.5)), 3: SatakeGL2.from_hecke_eigenvalue(1.2)}
g = h_global(Pi, data, IdealFactorization({2: 1}), IdealFactorization({3: 1}), EvalPoint(0.5, 0.5), conjugate=False)
print(f"global weight with q = 2, l = 3 at the central point: {g.value:.12f}")
