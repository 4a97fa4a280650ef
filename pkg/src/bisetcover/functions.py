"""Biset functions: the k-connectivity function, fan and area variants,
residuals, and brute-force classifiers for the supermodularity zoo.

Values are exact integers throughout. A BisetFunctionView carries declared
metadata (symmetry, class, a boundary cap for its positive bisets); the
declared bits are verified by the classifiers in tests and never trusted by
production code whose correctness depends on them.
"""

from dataclasses import dataclass, field

from .bisets import Biset, covers, enumerate_bisets, popcount
from .errors import InvariantError


class BisetFunctionView:
    """An integer-valued biset function over ground set {0..n-1}.

    evaluate(b) is cached per (inner, outer). positive_boundary_cap, when
    set, promises every f-positive biset has boundary size <= cap; the
    promise must hold by construction of the function, since positives()
    prunes its enumeration with it.
    """

    def __init__(
        self,
        n,
        evaluate,
        name="f",
        declared_symmetric=False,
        declared_class="unknown",
        positive_boundary_cap=None,
    ):
        self.n = n
        self._raw = evaluate
        self.name = name
        self.declared_symmetric = declared_symmetric
        self.declared_class = declared_class
        self.positive_boundary_cap = positive_boundary_cap
        self._cache = {}
        self._positives = None
        self._max_value = None

    def evaluate(self, b):
        key = (b.inner << self.n) | b.outer
        v = self._cache.get(key)
        if v is None:
            v = self._raw(b)
            self._cache[key] = v
        return v

    def positives(self):
        """All f-positive bisets with their values, in enumeration order."""
        if self._positives is None:
            out = []
            for b in enumerate_bisets(self.n, max_boundary=self.positive_boundary_cap):
                v = self.evaluate(b)
                if v > 0:
                    out.append((b, v))
            self._positives = out
        return self._positives

    def max_value(self):
        """max over ALL bisets of f, by full enumeration (cached)."""
        if self._max_value is None:
            self._max_value = max(
                self.evaluate(b) for b in enumerate_bisets(self.n)
            )
        return self._max_value

    def max_positive(self):
        """max f when f has a positive biset, else 0.

        Equals max(max_value, 0) but only needs the boundary-capped walk.
        """
        pos = self.positives()
        return max((v for _, v in pos), default=0)

    def __repr__(self):
        return f"BisetFunctionView({self.name}, n={self.n})"


def f_kcs(k, b):
    """k-connectivity requirement: k - |boundary| on proper bisets, else 0."""
    if not b.is_proper:
        return 0
    return k - popcount(b.boundary)


def kcs_view(k, n):
    if k < 1:
        raise ValueError("k must be >= 1")
    return BisetFunctionView(
        n,
        lambda b: f_kcs(k, b),
        name=f"kcs(k={k})",
        declared_symmetric=True,
        declared_class="crossing-supermodular",
        positive_boundary_cap=k - 1,
    )


def area(f, r_mask, b):
    """Area variant of f: f(b) - M * |inner(b) & R|, M = max f clamped at 0.

    Positive bisets of the area function keep their inner part off R. The
    clamp only matters when f has no positive biset at all; the unclamped
    multiplier would then *increase* values on R, which nothing upstream
    wants (an already-covered function stays covered).
    """
    m = f.max_positive()
    return f.evaluate(b) - m * popcount(b.inner & r_mask)


def area_view(f, r_mask):
    m = f.max_positive()

    def ev(b):
        return f.evaluate(b) - m * popcount(b.inner & r_mask)

    return BisetFunctionView(
        f.n,
        ev,
        name=f"area({f.name})",
        declared_symmetric=False,
        declared_class="unknown",
        positive_boundary_cap=f.positive_boundary_cap,
    )


def fan(k, r_mask, b):
    """Fan function: k - |boundary| - |inner & R| zeroed on void bisets."""
    if popcount(r_mask) != k:
        raise ValueError("fan function needs |R| = k")
    if b.is_void:
        return 0
    return k - popcount(b.boundary) - popcount(b.inner & r_mask)


def fan_view(k, r_mask, n):
    if popcount(r_mask) != k:
        raise ValueError("fan function needs |R| = k")

    def ev(b):
        if b.is_void:
            return 0
        return k - popcount(b.boundary) - popcount(b.inner & r_mask)

    return BisetFunctionView(
        n,
        ev,
        name=f"fan(k={k})",
        declared_symmetric=False,
        declared_class="intersecting-supermodular",
        positive_boundary_cap=k - 1,
    )


_RESIDUAL_CLASS_KEEP = {
    "crossing-supermodular",
    "intersecting-supermodular",
    "positively-intersecting-supermodular",
}


def residual(f, edges):
    """Residual view f^J: f(b) minus the number of edges of J covering b.

    Symmetry survives only when every edge is undirected. The supermodular
    class survives residuation (coverage counts are submodular on the biset
    lattice), so those declarations are inherited.
    """
    edges = list(edges)
    sym = f.declared_symmetric and not any(e.oriented for e in edges)
    cls = f.declared_class if f.declared_class in _RESIDUAL_CLASS_KEEP else "unknown"

    def ev(b):
        return f.evaluate(b) - sum(1 for e in edges if covers(e, b))

    return BisetFunctionView(
        f.n,
        ev,
        name=f"{f.name}^J",
        declared_symmetric=sym,
        declared_class=cls,
        positive_boundary_cap=f.positive_boundary_cap,
    )


@dataclass(frozen=True)
class KfResult:
    """1 + max boundary size over positive bisets, or the covered flag."""

    value: int
    already_covered: bool


def compute_k_f(f):
    """Exact k_f = 1 + max{|boundary(b)| : f(b) > 0} by enumeration.

    A function with no positive biset is already covered; the convention
    here is value 0 with the flag set.
    """
    pos = f.positives()
    if not pos:
        return KfResult(0, True)
    return KfResult(1 + max(popcount(b.boundary) for b, _ in pos), False)


def positive_union(f, p):
    """Union (as a mask) of inner parts of positive bisets with |inner| <= p."""
    u = 0
    for b, _ in f.positives():
        if popcount(b.inner) <= p:
            u |= b.inner
    return u


@dataclass(frozen=True)
class ClassVerdict:
    holds: bool
    counterexample: tuple | None = None


CLASS_CHECKS = (
    "symmetric",
    "modular",
    "supermodular",
    "intersecting_supermodular",
    "crossing_supermodular",
    "positively_intersecting_supermodular",
    "positively_skew_supermodular",
    "independence_free",
    "nonpositive_on_co_void",
)


@dataclass
class ClassReport:
    """Per-class verdicts from the exhaustive classifier."""

    n: int
    verdicts: dict = field(default_factory=dict)

    def holds(self, name):
        return self.verdicts[name].holds

    def counterexample(self, name):
        return self.verdicts[name].counterexample


_FULL_PAIR_CHECKS = {
    "modular",
    "supermodular",
    "intersecting_supermodular",
    "crossing_supermodular",
}
_POSITIVE_PAIR_CHECKS = {
    "positively_intersecting_supermodular",
    "positively_skew_supermodular",
    "independence_free",
}


def classify(f, checks=None):
    """Exhaustively test f against the function classes in CLASS_CHECKS.

    The unrestricted classes quantify over all pairs of the 3^n bisets (the
    enumeration cap guards the size); the "positively" variants and
    independence-freeness quantify only over pairs of f-positive bisets, so
    asking for just those is much cheaper. Verdicts carry the first
    counterexample pair in enumeration order.
    """
    wanted = set(CLASS_CHECKS if checks is None else checks)
    unknown = wanted.difference(CLASS_CHECKS)
    if unknown:
        raise ValueError(f"unknown class checks: {sorted(unknown)}")

    n = f.n
    full = (1 << n) - 1
    fails = {}

    def note(name, a, b):
        if name in wanted and name not in fails:
            fails[name] = (a, b)

    if "symmetric" in wanted:
        for b in enumerate_bisets(n):
            if f.evaluate(b) != f.evaluate(b.co()):
                note("symmetric", b, b.co())
                break

    if "nonpositive_on_co_void" in wanted:
        for inner in range(full + 1):
            b = Biset(inner, full, n)
            if f.evaluate(b) > 0:
                note("nonpositive_on_co_void", b, b)
                break

    if wanted & _FULL_PAIR_CHECKS:
        bisets = list(enumerate_bisets(n))
        vals = [f.evaluate(b) for b in bisets]
        idx = {(b.inner << n) | b.outer: i for i, b in enumerate(bisets)}
        inner = [b.inner for b in bisets]
        outer = [b.outer for b in bisets]
        count = len(bisets)
        for i in range(count):
            ii, oi, vi = inner[i], outer[i], vals[i]
            for j in range(i, count):
                ij, oj = inner[j], outer[j]
                s1 = vals[idx[((ii & ij) << n) | (oi & oj)]] + vals[
                    idx[((ii | ij) << n) | (oi | oj)]
                ] - vi - vals[j]
                if s1 == 0:
                    continue
                note("modular", bisets[i], bisets[j])
                if s1 < 0:
                    note("supermodular", bisets[i], bisets[j])
                    if ii & ij:
                        note("intersecting_supermodular", bisets[i], bisets[j])
                        if (oi | oj) != full:
                            note("crossing_supermodular", bisets[i], bisets[j])

    if wanted & _POSITIVE_PAIR_CHECKS:
        pos = f.positives()
        for x in range(len(pos)):
            a, va = pos[x]
            for y in range(x, len(pos)):
                b, vb = pos[y]
                intersecting = a.inner & b.inner != 0
                crossing = intersecting and (a.outer | b.outer) != full
                s1 = f.evaluate(a.meet(b)) + f.evaluate(a.join(b)) - va - vb
                if s1 < 0 and intersecting:
                    note("positively_intersecting_supermodular", a, b)
                da = a.diff(b)
                db = b.diff(a)
                co_crossing = da.inner != 0 and db.inner != 0
                if s1 < 0 and "positively_skew_supermodular" in wanted:
                    s2 = f.evaluate(da) + f.evaluate(db) - va - vb
                    if s2 < 0:
                        note("positively_skew_supermodular", a, b)
                if not crossing and not co_crossing:
                    note("independence_free", a, b)

    report = ClassReport(n)
    for name in wanted:
        if name in fails:
            report.verdicts[name] = ClassVerdict(False, fails[name])
        else:
            report.verdicts[name] = ClassVerdict(True)
    return report


@dataclass(frozen=True)
class FamilyStats:
    """Exact size statistics of a biset family.

    p: max inner size, q: max boundary size, nu: max number of pairwise
    inner-disjoint members (exact, via branch and bound), u_mask: union of
    inner parts.
    """

    p: int
    q: int
    nu: int
    u_mask: int


def _max_inner_disjoint(members):
    # exact maximum independent set on the inner-intersection graph
    count = len(members)
    if count == 0:
        return 0
    conflict = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if members[i].inner & members[j].inner:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0

    def grow(cand_mask, size):
        nonlocal best
        if size + popcount(cand_mask) <= best:
            return
        if cand_mask == 0:
            best = max(best, size)
            return
        # branch on the candidate with the most remaining conflicts
        pick = -1
        pick_deg = -1
        m = cand_mask
        while m:
            v = (m & -m).bit_length() - 1
            deg = popcount(conflict[v] & cand_mask)
            if deg > pick_deg:
                pick, pick_deg = v, deg
            m &= m - 1
        grow(cand_mask & ~(1 << pick) & ~conflict[pick], size + 1)
        grow(cand_mask & ~(1 << pick), size)

    grow((1 << count) - 1, 0)
    return best


def family_stats(family):
    members = list(family)
    if not members:
        return FamilyStats(0, 0, 0, 0)
    return FamilyStats(
        p=max(popcount(b.inner) for b in members),
        q=max(popcount(b.boundary) for b in members),
        nu=_max_inner_disjoint(members),
        u_mask=_or_all(b.inner for b in members),
    )


def _or_all(masks):
    u = 0
    for m in masks:
        u |= m
    return u


@dataclass(frozen=True)
class UncrossVerdict:
    ok: bool
    witness: tuple | None = None
    stats: FamilyStats | None = None


def check_weakly_posi_uncrossable(family):
    """Is the family closed under taking one difference when both are non-void?

    For every member pair whose two biset differences both have nonempty
    inner parts, at least one difference must itself be in the family. On a
    true verdict the union-size bound |U| <= nu * (2q(p-1) + p) is also
    asserted, since it provably holds for such families.
    """
    members = list(family)
    key = {(b.inner, b.outer) for b in members}
    witness = None
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            a, b = members[i], members[j]
            dab = a.diff(b)
            dba = b.diff(a)
            if dab.inner and dba.inner:
                if (dab.inner, dab.outer) not in key and (
                    dba.inner,
                    dba.outer,
                ) not in key:
                    witness = (a, b)
                    break
        if witness:
            break
    stats = family_stats(members)
    if witness is not None:
        return UncrossVerdict(False, witness, stats)
    bound = stats.nu * (2 * stats.q * (stats.p - 1) + stats.p) if members else 0
    if popcount(stats.u_mask) > bound:
        raise InvariantError(
            f"union-size bound failed on an uncrossable family: "
            f"|U|={popcount(stats.u_mask)} > {bound} (p={stats.p}, q={stats.q}, "
            f"nu={stats.nu})"
        )
    return UncrossVerdict(True, None, stats)
