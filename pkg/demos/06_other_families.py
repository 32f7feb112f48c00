"""Sieving checks for trees, dissections, partitions, forests and all graphs.

Forest and general-graph cells are open conjectures; they are reported with
their own verdicts and never fail a run.

Run: python3 demos/06_other_families.py
"""

from ncsieve.formulas import family_qpoly
from ncsieve.harness import verify_family

print("T(4;q) =", family_qpoly("tree", 4).quotient)
print("F(6,2;q) =", family_qpoly("forest", 6, 2).quotient)

for tag in ("tree", "dissection", "partition", "forest", "graph"):
    rep = verify_family(tag, 7)
    s = rep.summary
    status = rep.cells[0].status
    print(f"{tag:11s} n <= 7: {s['pass']:4d} cells agree, {s['fail']} disagree ({status})")
