"""Biset algebra over a small ground set.

A biset is an ordered pair (inner, outer) of node sets with inner <= outer.
Node sets are int bitmasks over ids 0..n-1, which keeps the lattice
operations (meet, join, difference, boundary) single-instruction and makes
exhaustive enumeration of all 3^n bisets feasible for the ground-set sizes
this library targets.

The exhaustive walks are guarded by a module-level cap (default 14 ids);
raise it explicitly via set_enumeration_cap if you know what you are asking
for.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import EnumerationCapError, InvariantError

DEFAULT_ENUMERATION_CAP = 14
_enumeration_cap = DEFAULT_ENUMERATION_CAP


def set_enumeration_cap(n):
    """Raise or lower the guard on exhaustive 3^n biset walks."""
    global _enumeration_cap
    if n < 1:
        raise ValueError("cap must be >= 1")
    _enumeration_cap = n


def get_enumeration_cap():
    return _enumeration_cap


def mask_of(ids):
    """Bitmask of an iterable of node ids."""
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def ids_of(mask):
    """Sorted node ids of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return mask.bit_count()


@dataclass(frozen=True)
class GroundSet:
    """The node universe {0, ..., n-1}."""

    n: int

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def complement(self, mask):
        return self.full_mask & ~mask


@dataclass(frozen=True)
class Biset:
    """Ordered pair of node sets inner <= outer, as bitmasks over n ids.

    boundary = outer minus inner, co_set = complement of outer. The co-biset
    swaps the roles of inner and co_set while keeping the boundary.
    """

    inner: int
    outer: int
    n: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.inner & ~self.outer:
            raise ValueError("inner set must be contained in outer set")
        if self.outer & ~full:
            raise ValueError("outer set exceeds ground set")

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def boundary(self):
        return self.outer & ~self.inner

    @property
    def co_set(self):
        return self.full_mask & ~self.outer

    @property
    def is_void(self):
        return self.inner == 0

    @property
    def is_co_void(self):
        return self.outer == self.full_mask

    @property
    def is_proper(self):
        return not self.is_void and not self.is_co_void

    def co(self):
        """Co-biset: (complement of outer, complement of inner)."""
        full = self.full_mask
        return Biset(full & ~self.outer, full & ~self.inner, self.n)

    def meet(self, other):
        return Biset(self.inner & other.inner, self.outer & other.outer, self.n)

    def join(self, other):
        return Biset(self.inner | other.inner, self.outer | other.outer, self.n)

    def diff(self, other):
        """Biset difference: (inner \\ other.outer, outer \\ other.inner)."""
        return Biset(self.inner & ~other.outer, self.outer & ~other.inner, self.n)

    def __repr__(self):
        return (
            f"Biset(inner={ids_of(self.inner)}, boundary={ids_of(self.boundary)}, "
            f"n={self.n})"
        )


@dataclass(frozen=True)
class Edge:
    """Graph edge between node ids u and v.

    oriented=False is an undirected edge; oriented=True is the arc u -> v.
    """

    u: int
    v: int
    oriented: bool = False

    def endpoints_mask(self):
        return (1 << self.u) | (1 << self.v)


def covers(edge, biset):
    """True if the edge covers the biset.

    Undirected: one endpoint in inner, the other in the co-set. Directed:
    the arc goes from the inner part to the co-set (tail in inner, head in
    the co-set).
    """
    inner = biset.inner
    co = biset.co_set
    head = 1 << edge.v
    tail = 1 << edge.u
    if edge.oriented:
        return bool(tail & inner) and bool(head & co)
    return (bool(head & inner) and bool(tail & co)) or (
        bool(tail & inner) and bool(head & co)
    )


def delta(edges, biset):
    """Indices of the edges covering the biset."""
    return [i for i, e in enumerate(edges) if covers(e, biset)]


def cover_mask(edges, biset):
    """Bitmask over edge indices of the edges covering the biset."""
    m = 0
    for i, e in enumerate(edges):
        if covers(e, biset):
            m |= 1 << i
    return m


def edges_within(edges, node_mask):
    """Indices of edges with both endpoints inside node_mask."""
    return [
        i
        for i, e in enumerate(edges)
        if (1 << e.u) & node_mask and (1 << e.v) & node_mask
    ]


def edges_crossing(edges, node_mask):
    """Indices of edges with exactly one endpoint inside node_mask."""
    return [
        i
        for i, e in enumerate(edges)
        if bool((1 << e.u) & node_mask) != bool((1 << e.v) & node_mask)
    ]


@dataclass(frozen=True)
class BisetRelation:
    """How two bisets sit relative to each other.

    crossing: inner sets intersect and the outer sets do not exhaust V.
    co_crossing: both differences have nonempty inner sets.
    independent: neither. Independence always comes with a containment
    witness, one of the four inner/co-set-inside-a-boundary inclusions.
    """

    crossing: bool
    co_crossing: bool
    independent: bool
    witness: str | None


_WITNESS_CHECKS = (
    ("inner(a) in bd(b)", lambda a, b: a.inner & ~b.boundary == 0),
    ("co(a) in bd(b)", lambda a, b: a.co_set & ~b.boundary == 0),
    ("inner(b) in bd(a)", lambda a, b: b.inner & ~a.boundary == 0),
    ("co(b) in bd(a)", lambda a, b: b.co_set & ~a.boundary == 0),
)


def relation(a, b):
    """Classify the pair: crossing, co-crossing, or independent.

    For an independent pair, one of the four containment witnesses must hold;
    that characterization is enforced at runtime, not assumed.
    """
    if a.n != b.n:
        raise ValueError("bisets over different ground sets")
    full = a.full_mask
    crossing = bool(a.inner & b.inner) and (a.outer | b.outer) != full
    co_crossing = bool(a.inner & ~b.outer) and bool(b.inner & ~a.outer)
    independent = not crossing and not co_crossing
    witness = None
    if independent:
        for name, check in _WITNESS_CHECKS:
            if check(a, b):
                witness = name
                break
        if witness is None:
            raise InvariantError(
                f"independent pair without a containment witness: {a!r}, {b!r}"
            )
    return BisetRelation(crossing, co_crossing, independent, witness)


def _submasks_ascending(mask):
    # (s - mask) & mask steps to the next-larger submask of mask
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


def enumerate_bisets(n, max_boundary=None, proper_only=False, cap=None):
    """Yield all bisets over n ids in lexicographic (inner, outer) mask order.

    max_boundary restricts |outer \\ inner|; proper_only drops void and
    co-void bisets. The walk visits 3^n bisets when unrestricted, so n is
    checked against the enumeration cap first.
    """
    limit = cap if cap is not None else _enumeration_cap
    if n > limit:
        raise EnumerationCapError(
            f"ground set of {n} exceeds enumeration cap {limit}; "
            "raise it via set_enumeration_cap or the max-n option"
        )
    full = (1 << n) - 1
    for inner in range(full + 1):
        if proper_only and inner == 0:
            continue
        comp = full & ~inner
        comp_bits = None
        if max_boundary is not None and max_boundary < popcount(comp):
            comp_bits = ids_of(comp)
            masks = []
            for size in range(max_boundary + 1):
                for combo in combinations(comp_bits, size):
                    masks.append(mask_of(combo))
            masks.sort()
            bmasks = masks
        else:
            bmasks = _submasks_ascending(comp)
        for bmask in bmasks:
            outer = inner | bmask
            if proper_only and outer == full:
                continue
            yield Biset(inner, outer, n)
