"""Fold rotation-symmetric graphs onto smaller polygons.

Run: python3 demos/05_folding_symmetric_graphs.py
"""

from ncsieve.bijections import (
    fold_d,
    fold_diameter,
    has_central_polygon,
    unfold_d,
)
from ncsieve.formulas import closed_f, closed_s2_even
from ncsieve.ncgraph import Family, NcGraph, enumerate_fixed

# Half-turn symmetry with an odd number of edges forces a diameter; cutting
# along it leaves half the graph.
g = NcGraph(4, ((1, 3), (2, 3), (1, 4)))
print(g, " fold along the diameter ->", fold_diameter(g))

# For order d >= 3 either the centre sits in a d-gon of edges, or the graph
# folds onto 2n/d points as a half-turn symmetric graph.
n, d = 9, 3
for k in range(n, 2 * n - 2, d):  # only multiples of d can be fixed
    fixed = list(enumerate_fixed(n, k, d, Family.connected()))
    central = [x for x in fixed if has_central_polygon(x, d)]
    plain = [x for x in fixed if not has_central_polygon(x, d)]
    m, j = n // d, k // d
    print(f"\nn={n} k={k}: {len(fixed)} fixed graphs")
    print(f"  with a central triangle: {len(central)} (predicted {m * closed_f(m + 1, j)})")
    print(f"  folded: {len(plain)} (predicted {closed_s2_even(2 * m, 2 * j)})")
    for x in plain[:2]:
        h = fold_d(x, d)
        print(f"    {x}  ->  {h}  ->  back ok: {unfold_d(h, d) == x}")
