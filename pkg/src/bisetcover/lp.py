"""The biset-cover LP, solved exactly.

min c.x  s.t.  x(delta(b)) >= f(b) for every f-positive biset b, 0 <= x <= 1.

Everything is exact rational arithmetic. The solver is a self-contained
dense-tableau simplex with Bland's rule, run on the complemented problem
(y = 1 - x), whose all-slack basis is feasible whenever the LP is feasible
at all; feasibility itself is decided up front by checking x = 1, which is
the coordinate-wise maximal point. Enumerated constraint rows are reduced
by deduplication and dominance and activated lazily: the tableau only sees
a violated subset, but every enumerated row is scanned exactly before a
solution is returned, and the returned solution is a vertex. No separation
oracles, no floats.
"""

from dataclasses import dataclass

from .bisets import cover_mask, ids_of, popcount
from .errors import InfeasibleCoverError, InvariantError
from .rationals import ONE, ZERO, as_rat, rat_str


@dataclass(frozen=True)
class LPRow:
    biset: object
    rhs: int
    mask: int  # bitmask over edge indices of the covering edges


@dataclass
class BisetLP:
    edges: list
    costs: list
    rows: list
    mode: str
    function_name: str = "f"


@dataclass
class FractionalSolution:
    lp: BisetLP
    x: list
    value: object

    def cost_of(self, edge_mask):
        """Exact x-cost of the edges selected by the index mask."""
        total = ZERO
        m = edge_mask
        while m:
            e = (m & -m).bit_length() - 1
            total += self.lp.costs[e] * self.x[e]
            m &= m - 1
        return total

    def row_value(self, mask):
        total = ZERO
        m = mask
        while m:
            e = (m & -m).bit_length() - 1
            total += self.x[e]
            m &= m - 1
        return total

    def assert_feasible(self):
        """Exact recheck of every enumerated row and both variable bounds."""
        for e, xe in enumerate(self.x):
            if xe < 0 or xe > 1:
                raise InvariantError(f"variable x{e}={xe} out of [0,1]")
        for row in self.lp.rows:
            if self.row_value(row.mask) < row.rhs:
                raise InvariantError(
                    f"solution violates row for {row.biset!r} (needs {row.rhs})"
                )
        total = ZERO
        for e, xe in enumerate(self.x):
            total += self.lp.costs[e] * xe
        if total != self.value:
            raise InvariantError("stored value differs from c.x")


def build_lp_from_edges(edges, costs, f, mode_label="custom"):
    """LP rows for the f-positive bisets against an explicit edge list.

    Orientation is per-edge (Edge.oriented); rows appear in biset
    enumeration order. Bisets covered by no edge still get rows (their
    infeasibility must be reportable, not silently dropped).
    """
    edges = list(edges)
    costs = [as_rat(c) for c in costs]
    if len(edges) != len(costs):
        raise ValueError("edges and costs must align")
    rows = []
    for b, val in f.positives():
        rows.append(LPRow(biset=b, rhs=val, mask=cover_mask(edges, b)))
    return BisetLP(edges=edges, costs=costs, rows=rows, mode=mode_label,
                   function_name=f.name)


def build_biset_lp(instance, f, mode="undirected"):
    """Instance-facing builder; directed mode bidirects the finite edges."""
    from .bisets import Edge

    edges, costs = instance.finite_edges()
    if mode == "undirected":
        return build_lp_from_edges(edges, costs, f, mode_label="undirected")
    if mode == "directed":
        arcs = []
        arc_costs = []
        for e, c in zip(edges, costs):
            arcs.append(Edge(e.u, e.v, oriented=True))
            arc_costs.append(c)
            arcs.append(Edge(e.v, e.u, oriented=True))
            arc_costs.append(c)
        return build_lp_from_edges(arcs, arc_costs, f, mode_label="directed")
    raise ValueError(f"unknown mode {mode!r}")


def reduce_rows(rows):
    """Drop duplicate and dominated rows; the polytope is unchanged.

    A row is implied by any row with a subset of its covering edges and a
    rhs at least as large. Among identical masks only the strongest
    survives. Survivors keep enumeration order.
    """
    by_mask = {}
    for row in rows:
        if row.rhs <= 0:
            continue
        cur = by_mask.get(row.mask)
        if cur is None or row.rhs > cur.rhs:
            by_mask[row.mask] = row
    items = list(by_mask.values())
    keep = []
    for row in items:
        implied = False
        for other in items:
            if other is row:
                continue
            if (
                other.mask & ~row.mask == 0
                and other.rhs >= row.rhs
                and (other.mask != row.mask)
            ):
                implied = True
                break
        if not implied:
            keep.append(row)
    return keep


def _pivot(tableau, obj, basis, leave, enter):
    prow = tableau[leave]
    piv = prow[enter]
    if piv != 1:
        prow = [v / piv for v in prow]
        tableau[leave] = prow
    for i, row in enumerate(tableau):
        if i == leave:
            continue
        factor = row[enter]
        if factor != 0:
            tableau[i] = [a - factor * b for a, b in zip(row, prow)]
    factor = obj[enter]
    if factor != 0:
        for j, b in enumerate(prow):
            obj[j] -= factor * b
    basis[leave] = enter


def _simplex_packing(gains, rows, ne):
    """max gains.y  s.t.  y(mask_i) <= ub_i, 0 <= y_e <= 1. Bland's rule.

    The all-slack basis (y = 0) is feasible since every ub is >= 0, so no
    phase 1 is needed. Returns (y, objective value); deterministic.
    """
    all_rows = list(rows) + [((1 << e), ONE) for e in range(ne)]
    m = len(all_rows)
    ncols = ne + m
    tableau = []
    for i, (mask, ub) in enumerate(all_rows):
        if ub < 0:
            raise InvariantError("packing row with negative capacity")
        row = [ONE if (mask >> j) & 1 else ZERO for j in range(ne)]
        row.extend(ONE if r == i else ZERO for r in range(m))
        row.append(as_rat(ub))
        tableau.append(row)
    obj = [as_rat(g) for g in gains] + [ZERO] * m + [ZERO]
    basis = [ne + i for i in range(m)]
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise InvariantError("packing LP unbounded; bounds rows missing")
        _pivot(tableau, obj, basis, leave, enter)
    y = [ZERO] * ne
    for i, b in enumerate(basis):
        if b < ne:
            y[b] = tableau[i][-1]
    return y, -obj[-1]


def solve_lp(lp, activation_batch=8):
    """Exact optimal FractionalSolution, or InfeasibleCoverError with the
    violated biset.

    Feasibility is settled at x = 1 (the maximal point): a positive biset
    with fewer covering edges than its requirement can never be covered
    fractionally either. The simplex then runs on y = 1 - x with lazily
    activated rows; on return the solution has been exactly rechecked
    against every enumerated row.
    """
    ne = len(lp.edges)
    for row in lp.rows:
        if popcount(row.mask) < row.rhs:
            raise InfeasibleCoverError(
                f"biset {row.biset!r} needs {row.rhs} covering edges but only "
                f"{popcount(row.mask)} exist",
                witness=row.biset,
            )
    reduced = reduce_rows(lp.rows)
    gains = lp.costs  # max c.y == min c.(1-y) shifted by sum(c)
    active = []
    active_set = set()
    while True:
        packing = [
            (reduced[i].mask, as_rat(popcount(reduced[i].mask) - reduced[i].rhs))
            for i in active
        ]
        y, _gain = _simplex_packing(gains, packing, ne)
        x = [ONE - ye for ye in y]
        violated = []
        for idx, row in enumerate(reduced):
            if idx in active_set:
                continue
            have = ZERO
            m = row.mask
            while m:
                e = (m & -m).bit_length() - 1
                have += x[e]
                m &= m - 1
            if have < row.rhs:
                violated.append((row.rhs - have, idx))
        if not violated:
            break
        violated.sort(key=lambda t: (-t[0], t[1]))
        for _, idx in violated[:activation_batch]:
            active.append(idx)
            active_set.add(idx)
        active.sort()
    value = ZERO
    for e in range(ne):
        value += lp.costs[e] * x[e]
    sol = FractionalSolution(lp=lp, x=x, value=value)
    sol.assert_feasible()
    return sol


@dataclass(frozen=True)
class CostPartition:
    gamma: object  # x-cost with both endpoints in R
    delta: object  # x-cost crossing R
    gamma_bar: object  # x-cost with both endpoints outside R


def cost_partition(sol, r_mask):
    """Exact three-way split of the x-cost by edge position relative to R."""
    edges = sol.lp.edges
    costs = sol.lp.costs
    gamma = ZERO
    delta = ZERO
    gamma_bar = ZERO
    for e, edge in enumerate(edges):
        u_in = bool((1 << edge.u) & r_mask)
        v_in = bool((1 << edge.v) & r_mask)
        piece = costs[e] * sol.x[e]
        if u_in and v_in:
            gamma += piece
        elif u_in or v_in:
            delta += piece
        else:
            gamma_bar += piece
    if gamma + delta + gamma_bar != sol.value:
        raise InvariantError("cost partition does not sum to tau")
    return CostPartition(gamma=gamma, delta=delta, gamma_bar=gamma_bar)


def dump_lp(lp, path=None):
    """Text rendering, one constraint per line, exact rationals."""
    out = [f"\\ biset cover lp: mode={lp.mode} f={lp.function_name}"]
    terms = " + ".join(f"{rat_str(c)} x{e}" for e, c in enumerate(lp.costs))
    out.append(f"min: {terms};")
    for i, row in enumerate(lp.rows):
        lhs = " + ".join(f"x{e}" for e in ids_of(row.mask)) or "0"
        b = row.biset
        out.append(
            f"r{i}: {lhs} >= {row.rhs};  "
            f"\\ inner={ids_of(b.inner)} boundary={ids_of(b.boundary)}"
        )
    for e in range(len(lp.costs)):
        out.append(f"b{e}: 0 <= x{e} <= 1;")
    text = "\n".join(out) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
