"""Turn non-crossing trees into quadrangulations and back.

Run: python3 demos/04_trees_and_quadrangulations.py
"""

from ncsieve.bijections import quad_to_tree, tree_to_quad
from ncsieve.ncgraph import Family, enumerate_family, rotate

# Tree vertex i sits at polygon corner 2i - 1; the even corners are new.
for t in enumerate_family(3, None, Family.tree()):
    q = tree_to_quad(t)
    print(f"{t}   ->   {q}   ->   {quad_to_tree(q)}")

# Rotating the tree by one step rotates the quadrangulation by two.
t = next(iter(enumerate_family(5, None, Family.tree())))
print("\ntree       ", t)
print("quad       ", tree_to_quad(t))
print("rotated    ", rotate(t, 1))
print("its quad   ", tree_to_quad(rotate(t, 1)))

for n in range(2, 8):
    trees = list(enumerate_family(n, None, Family.tree()))
    ok = all(quad_to_tree(tree_to_quad(x)) == x for x in trees)
    print(f"n={n}: {len(trees)} trees, round trip {'ok' if ok else 'broken'}")
