"""
Bisets: pairs of nested node sets
=================================

A biset is a pair (inner, outer) with inner included in outer, both
bitmasks over the node ids. The boundary is outer minus inner; the co-set
is everything outside outer. An edge covers a biset when it runs from the
inner part to the co-set.
"""

from bisetcover import Biset, Edge, ids_of, mask_of, relation
from bisetcover.bisets import covers

n = 5
a = Biset(mask_of([0, 1]), mask_of([0, 1, 2]), n)
b = Biset(mask_of([1, 3]), mask_of([1, 2, 3]), n)

print("a: inner", ids_of(a.inner), "boundary", ids_of(a.boundary), "co-set", ids_of(a.co_set))
print("b: inner", ids_of(b.inner), "boundary", ids_of(b.boundary), "co-set", ids_of(b.co_set))

# meet and join intersect / unite both parts
print("meet:", ids_of(a.meet(b).inner), ids_of(a.meet(b).outer))
print("join:", ids_of(a.join(b).inner), ids_of(a.join(b).outer))

# the two differences subtract the other biset's outer part from the inner
# part and the other inner part from the outer part
print("a minus b:", ids_of(a.diff(b).inner), ids_of(a.diff(b).outer))
print("b minus a:", ids_of(b.diff(a).inner), ids_of(b.diff(a).outer))

# the co biset swaps inner part and co-set
print("co(a):", ids_of(a.co().inner), ids_of(a.co().outer))

# covering: 0-4 runs from inner(a) to the co-set of a, 0-2 only reaches the
# boundary, and an oriented arc must leave the inner part
print("0-4 covers a:", covers(Edge(0, 4), a))
print("0-2 covers a:", covers(Edge(0, 2), a))
print("4->0 covers a (oriented):", covers(Edge(4, 0, oriented=True), a))
print("0->4 covers a (oriented):", covers(Edge(0, 4, oriented=True), a))

# how two bisets relate: crossing, co-crossing, or independent
rel = relation(a, b)
print("a vs b:", "crossing" if rel.crossing else "co-crossing" if rel.co_crossing else "independent")
