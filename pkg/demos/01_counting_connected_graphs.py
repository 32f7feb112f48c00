"""Count non-crossing connected graphs two ways and watch them agree.

Run: python3 demos/01_counting_connected_graphs.py
"""

from ncsieve.formulas import count_connected
from ncsieve.ncgraph import Family, count_by_k, enumerate_family

# The smallest interesting case: four points on a circle, three edges.
print("Connected non-crossing graphs on 4 points with 3 edges:")
for g in enumerate_family(4, 3, Family.connected()):
    print("   ", g)

# Enumeration versus the closed formula, row by row.
print("\n n   k : enumerated  formula")
for n in range(2, 8):
    by_k = count_by_k(n, Family.connected())
    for k in range(n - 1, 2 * n - 2):
        print(f"{n:2d} {k:3d} : {by_k.get(k, 0):10d} {count_connected(n, k):8d}")
