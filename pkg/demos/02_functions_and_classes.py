"""
Biset functions and the class lattice
=====================================

The connectivity requirement "k internally disjoint paths between every
node pair" becomes a demand function on bisets: each proper biset must be
covered by at least k minus its boundary size edges. The classifier tests
a function against every class the analysis relies on, by enumeration.
"""

from bisetcover import Edge, classify, compute_k_f, ids_of, kcs_view, mask_of, residual
from bisetcover.functions import area_view

k, n = 2, 5
f = kcs_view(k, n)

# a few sample demands
for inner, outer in [([0], [0]), ([0], [0, 1]), ([0, 1], [0, 1, 2])]:
    from bisetcover import Biset

    b = Biset(mask_of(inner), mask_of(outer), n)
    print(f"demand of (inner={inner}, boundary={ids_of(b.boundary)}):", f.evaluate(b))

# where the function sits in the class lattice
rep = classify(f)
for name in ("symmetric", "crossing_supermodular", "independence_free", "modular"):
    print(f"{name}: {'holds' if rep.holds(name) else 'fails'}")

# covering edges lowers the residual demand; the residual keeps the class
g = residual(f, [Edge(0, 1), Edge(0, 2), Edge(1, 2)])
print("positives before:", len(f.positives()), " after the triangle:", len(g.positives()))
print("residual still crossing supermodular:", classify(g, checks=("crossing_supermodular",)).holds("crossing_supermodular"))

# k_f is one more than the largest positive boundary
print("k_f:", compute_k_f(f).value)

# the area variant only demands bisets whose inner part avoids R; it is the
# function the directed subproblem covers exactly
fr = area_view(f, mask_of([0, 1, 2]))
print("area-variant positives:", len(fr.positives()))
for b, val in fr.positives()[:3]:
    print("  e.g. inner", ids_of(b.inner), "boundary", ids_of(b.boundary), "demand", val)
