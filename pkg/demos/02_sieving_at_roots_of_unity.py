"""Evaluate the q-analogue at roots of unity and compare with fixed graphs.

Run: python3 demos/02_sieving_at_roots_of_unity.py
"""

from ncsieve.algebra import eval_at_root
from ncsieve.formulas import qpoly_connected
from ncsieve.ncgraph import count_fixed, enumerate_fixed, Family

n, k = 6, 6
p = qpoly_connected(n, k)
print(f"c({n},{k};q) = {p}")

# Values at primitive d-th roots live in Q[q]/Phi_d, so no floats appear.
for d in (1, 2, 3, 6):
    value = eval_at_root(p, d).to_int()
    print(f"  d={d}: value {value:4d}   graphs fixed by rotation of order d: {count_fixed(n, k, d)}")

print("\nThe five graphs fixed by a third of a turn:")
for g in enumerate_fixed(6, 6, 3, Family.connected()):
    print("   ", g)

# When d does not divide k, free orbits of edges make both sides vanish.
print("\nc(6,7;omega_3) =", eval_at_root(qpoly_connected(6, 7), 3).to_int())
