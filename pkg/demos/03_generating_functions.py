"""Solve the functional equation for y and read counts off the series.

Run: python3 demos/03_generating_functions.py
"""

from ncsieve.formulas import closed_a
from ncsieve.series import (
    build_F,
    connected_series,
    cubic_residual,
    lagrange_coefficient,
    phi_connected,
    psi_log1p,
    solve_y,
)

N = 6
C = connected_series(N)
print("C(z, w) through z^6:")
for n in range(1, N + 1):
    print(f"  z^{n}: {C[n].format('w')}")

print("\nC satisfies its cubic through z^10:", cubic_residual(10).is_zero())

F = build_F(5)
print("\nGraphs using the chord {1, n}, by (n, edges):")
for n in range(2, 6):
    print(f"  n={n}: {F[n].format('w')}")

# log(1 + y) counts half-turn symmetric graphs, divided by n.
L = solve_y(4).log1p()
print("\nlog(1+y) versus a(n,k)/n:")
for n in range(1, 5):
    print(f"  z^{n}: {L[n].format('w')}    a(n,k): {[closed_a(n, k) for k in range(2 * n)]}")

print("\nThe same z^2 coefficient by Lagrange inversion:",
      lagrange_coefficient(phi_connected(3), psi_log1p(3), 2).format("w"))
