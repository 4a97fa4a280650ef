"""Instance model and the text file format.

Header line "n m k" with an optional trailing "complete" flag, then m lines
"u v cost". Costs are nonnegative integers, decimals, or ratios, or the
literal "inf" for forbidden edges. "#" starts a comment. The complete flag
declares that every pair not listed is implicitly forbidden, which only
affects bookkeeping (completeness accounting), not the solvable edge set.
"""

import random
from dataclasses import dataclass, field

from .bisets import Edge
from .errors import ParseError
from .rationals import as_rat, is_integral, rat_str


@dataclass(frozen=True)
class InstanceEdge:
    u: int
    v: int
    cost: object  # exact rational, or None for an infinite (forbidden) edge


@dataclass
class Instance:
    n: int
    k: int
    edges: list = field(default_factory=list)
    complete: bool = False

    def finite_edges(self):
        """(Edge list, cost list) for the usable edges, in input order."""
        es = []
        costs = []
        for e in self.edges:
            if e.cost is not None:
                es.append(Edge(e.u, e.v))
                costs.append(e.cost)
        return es, costs

    @property
    def m(self):
        return len(self.edges)


def parse_instance(text):
    lines = text.splitlines()
    header = None
    edges = []
    seen = {}
    n = m = k = 0
    complete = False
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) not in (3, 4):
                raise ParseError(line_no, "header must be 'n m k' or 'n m k complete'")
            try:
                n, m, k = (int(p) for p in parts[:3])
            except ValueError:
                raise ParseError(line_no, f"non-integer header field in {parts[:3]}")
            if len(parts) == 4:
                if parts[3] != "complete":
                    raise ParseError(line_no, f"unknown header flag {parts[3]!r}")
                complete = True
            if n < 1:
                raise ParseError(line_no, "need at least one node")
            if m < 0 or k < 0:
                raise ParseError(line_no, "m and k must be nonnegative")
            header = line_no
            continue
        if len(parts) != 3:
            raise ParseError(line_no, "edge line must be 'u v cost'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer endpoint in {parts[:2]}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise ParseError(line_no, f"self-loop at node {u}")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise ParseError(
                line_no, f"duplicate edge {pair} (first seen on line {seen[pair]})"
            )
        seen[pair] = line_no
        if parts[2] == "inf":
            cost = None
        else:
            try:
                cost = as_rat(parts[2])
            except (ValueError, ZeroDivisionError, TypeError):
                raise ParseError(line_no, f"bad cost {parts[2]!r}")
            if cost < 0:
                raise ParseError(line_no, f"negative cost {parts[2]}")
        edges.append(InstanceEdge(u, v, cost))
    if header is None:
        raise ParseError(len(lines) or 1, "empty instance: no header line")
    if len(edges) != m:
        raise ParseError(
            len(lines) or 1, f"header declares m={m} but found {len(edges)} edges"
        )
    return Instance(n=n, k=k, edges=edges, complete=complete)


def _format_cost(cost):
    if cost is None:
        return "inf"
    c = as_rat(cost)
    if is_integral(c):
        return str(c.numerator)
    return rat_str(c)


def format_instance(instance):
    flag = " complete" if instance.complete else ""
    out = [f"{instance.n} {instance.m} {instance.k}{flag}"]
    for e in instance.edges:
        out.append(f"{e.u} {e.v} {_format_cost(e.cost)}")
    return "\n".join(out) + "\n"


def random_instance(n, k, seed, max_finite_edges=None, cost_lo=1, cost_hi=10):
    """Seeded random k-connected instance with at most max_finite_edges edges.

    Starts from a random Hamiltonian cycle, adds random chords until the
    graph is k-connected, then pads with a few extra chords when budget
    remains so the solver has real choices. Deterministic per seed.
    """
    from .verify import is_k_connected

    if max_finite_edges is None:
        max_finite_edges = n * (n - 1) // 2
    if k >= n:
        raise ValueError("no simple graph on n nodes is n-or-more connected")
    rng = random.Random(seed)
    for _attempt in range(200):
        order = list(range(n))
        rng.shuffle(order)
        pairs = []
        present = set()
        for i in range(n):
            u, v = order[i], order[(i + 1) % n]
            p = (min(u, v), max(u, v))
            if p not in present:
                present.add(p)
                pairs.append(p)
        candidates = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in present
        ]
        rng.shuffle(candidates)
        ok = is_k_connected(n, [Edge(u, v) for u, v in pairs], k)[0]
        while not ok and candidates and len(pairs) < max_finite_edges:
            pairs.append(candidates.pop())
            present.add(pairs[-1])
            ok = is_k_connected(n, [Edge(u, v) for u, v in pairs], k)[0]
        if not ok:
            continue
        # pad with slack edges so optimal covers are nontrivial
        slack = max_finite_edges - len(pairs)
        for _ in range(rng.randint(0, slack) if slack > 0 else 0):
            if not candidates:
                break
            pairs.append(candidates.pop())
        edges = [
            InstanceEdge(u, v, as_rat(rng.randint(cost_lo, cost_hi)))
            for u, v in pairs
        ]
        return Instance(n=n, k=k, edges=edges)
    raise ValueError(
        f"could not generate a k-connected instance (n={n}, k={k}, "
        f"cap={max_finite_edges})"
    )
