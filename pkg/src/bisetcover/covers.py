"""Cover construction.

The solver stack, bottom up: an exact directed cover by LP-bounded branch
and bound, the area-transform round that reduces one undirected covering
step to a directed one, iterative LP rounding that either 2-approximates or
returns a failure certificate, and the growing outer loop that combines
those rounds into a 2(2+1/ell)-approximation. Every cost inequality the
analysis leans on is recomputed in exact rationals on the concrete run and
recorded in the returned report.
"""

from dataclasses import dataclass

from .bisets import cover_mask, delta, ids_of, mask_of, popcount, relation
from .bisets import Edge
from .errors import (
    CoverCheckError,
    EnumerationCapError,
    InfeasibleCoverError,
    InvariantError,
    PreconditionError,
)
from .functions import area_view, compute_k_f, kcs_view, positive_union, residual
from .lp import (
    BisetLP,
    LPRow,
    build_biset_lp,
    build_lp_from_edges,
    cost_partition,
    solve_lp,
)
from .rationals import ZERO, as_rat, rat, rat_str
from .verify import is_k_connected


AREA_COVER_STATS = {
    "calls": 0,
    "bound_checks": 0,
    "bound_violations": 0,
    "root_integral": 0,
    "bb_nodes": 0,
}


def reset_area_stats():
    for key in AREA_COVER_STATS:
        AREA_COVER_STATS[key] = 0


def iteration_budget_kcs(k, n):
    """Largest iteration budget the k-connectivity population test allows.

    The budget is the largest ell with
    n >= k * ((k*k - 1) * (2*k*k - 3*k + 2)**(ell - 1) + 1), floored at 1.
    For k = 1 every ell passes the test, so the budget is capped at n: the
    candidate node set must grow strictly between iterations or the loop
    exits, so more iterations than nodes cannot occur.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    q = 2 * k * k - 3 * k + 2
    ell = 1
    while ell < max(n, 1) and n >= k * ((k * k - 1) * q**ell + 1):
        ell += 1
    return ell


def approximation_ratio(ell):
    """The 2(2+1/ell) guarantee as an exact rational."""
    if ell < 1:
        raise ValueError("iteration budget must be >= 1")
    return rat(4 * ell + 2, ell)


def size_guarantee_holds(k_f, r1_size, n, ell):
    """Population test for running ell full rounds from an r1-sized seed.

    n must leave room for the candidate set to multiply by the per-round
    growth factor 2*k_f**2 - 3*k_f + 2 ell times and still keep a remainder
    as large as the seed.
    """
    if k_f <= 0:
        return True
    q = 2 * k_f * k_f - 3 * k_f + 2
    return n >= r1_size * (q**ell + 1)


def default_r1(instance, k_f):
    """Seed node set: the 2*k_f - 1 highest finite-degree nodes, ties by id."""
    deg = [0] * instance.n
    for e in instance.edges:
        if e.cost is not None:
            deg[e.u] += 1
            deg[e.v] += 1
    order = sorted(range(instance.n), key=lambda v: (-deg[v], v))
    take = min(max(2 * k_f - 1, 1), instance.n)
    return mask_of(order[:take])


@dataclass(frozen=True)
class IntegralCover:
    """Certified optimum of the integral covering problem.

    root_integral records whether the fractional relaxation at the root was
    already 0/1, in which case the search tree had a single node.
    """

    indices: tuple
    cost: object
    lp_value: object
    root_integral: bool
    nodes: int


def minimum_integral_cover(edges, costs, f):
    """Minimum-cost integral cover of f by the given edges, exactly.

    Branch and bound on edge inclusion. Every node solves the exact
    fractional relaxation of its subproblem; an integral relaxation makes
    the node a leaf, and bound pruning compares exact rationals against the
    incumbent, so the returned optimum is certified. Branching picks the
    most fractional variable (ties by edge id) and explores inclusion
    first.
    """
    edges = list(edges)
    costs = [as_rat(c) for c in costs]
    m = len(edges)
    base = [(row.biset, row.rhs, row.mask) for row in
            build_lp_from_edges(edges, costs, f).rows]
    if not base:
        return IntegralCover((), ZERO, ZERO, True, 1)

    state = {"best": None, "mask": 0, "nodes": 0, "root_integral": False,
             "root_value": None}

    def sub_lp(in_mask, dead_mask):
        free = [e for e in range(m) if not (dead_mask >> e) & 1]
        pos = {e: i for i, e in enumerate(free)}
        rows = []
        for biset, rhs, mask in base:
            need = rhs - popcount(mask & in_mask)
            if need <= 0:
                continue
            sub = 0
            mm = mask & ~dead_mask
            while mm:
                b = (mm & -mm).bit_length() - 1
                sub |= 1 << pos[b]
                mm &= mm - 1
            rows.append(LPRow(biset=biset, rhs=need, mask=sub))
        lp = BisetLP(
            edges=[edges[e] for e in free],
            costs=[costs[e] for e in free],
            rows=rows,
            mode="subproblem",
            function_name=f.name,
        )
        return lp, free

    def cost_of(mask):
        total = ZERO
        mm = mask
        while mm:
            e = (mm & -mm).bit_length() - 1
            total += costs[e]
            mm &= mm - 1
        return total

    def dfs(in_mask, out_mask):
        state["nodes"] += 1
        root = in_mask == 0 and out_mask == 0
        lp, free = sub_lp(in_mask, in_mask | out_mask)
        try:
            sol = solve_lp(lp)
        except InfeasibleCoverError:
            if root:
                raise
            return
        bound = cost_of(in_mask) + sol.value
        if root:
            state["root_value"] = sol.value
        if state["best"] is not None and bound >= state["best"]:
            return
        frac = None
        frac_score = None
        chosen = in_mask
        for j, e in enumerate(free):
            xj = sol.x[j]
            if xj == 0:
                continue
            if xj == 1:
                chosen |= 1 << e
                continue
            score = min(xj, 1 - xj)
            if frac_score is None or score > frac_score:
                frac, frac_score = e, score
        if frac is None:
            state["best"] = bound
            state["mask"] = chosen
            if root:
                state["root_integral"] = True
            return
        dfs(in_mask | (1 << frac), out_mask)
        dfs(in_mask, out_mask | (1 << frac))

    dfs(0, 0)
    if state["best"] is None:
        raise InvariantError("branch and bound exhausted without an incumbent")
    for biset, rhs, mask in base:
        if popcount(mask & state["mask"]) < rhs:
            raise InvariantError(f"claimed optimum leaves {biset!r} uncovered")
    return IntegralCover(
        indices=tuple(ids_of(state["mask"])),
        cost=state["best"],
        lp_value=state["root_value"],
        root_integral=state["root_integral"],
        nodes=state["nodes"],
    )


def exact_directed_cover(edges, costs, f):
    """Optimal cover of f by the given oriented edges; indices returned."""
    return list(minimum_integral_cover(edges, costs, f).indices)


def area_cover(instance, f, r_mask, solution=None, unchecked=False):
    """Cover the area variant of f, whose positive inner parts avoid R.

    Edges with both ends off R are bidirected, edges with one end in R are
    oriented into R, and edges inside R are dropped (they cover no positive
    biset of the area variant). The optimal directed cover is computed and
    its underlying undirected edge set returned, as indices into the
    instance's finite edges.

    The per-call cost bound
        c(I) <= (crossing-R part) + 2 * (outside-R part)
    of `solution` (the caller's fractional cover, or one computed here for
    the area variant itself) is rechecked exactly on every call and tallied
    in AREA_COVER_STATS.
    """
    edges, costs = instance.finite_edges()
    fr = area_view(f, r_mask)
    AREA_COVER_STATS["calls"] += 1
    if not fr.positives():
        return []
    kf = compute_k_f(f)
    if not unchecked and popcount(r_mask) < 2 * kf.value - 1:
        raise PreconditionError(
            f"area cover needs |R| >= {2 * kf.value - 1}, got {popcount(r_mask)}"
        )

    arcs = []
    arc_costs = []
    arc_src = []

    def arc(u, v, c, i):
        arcs.append(Edge(u, v, oriented=True))
        arc_costs.append(c)
        arc_src.append(i)

    for i, (e, c) in enumerate(zip(edges, costs)):
        u_in = bool((r_mask >> e.u) & 1)
        v_in = bool((r_mask >> e.v) & 1)
        if u_in and v_in:
            continue
        if not u_in and not v_in:
            arc(e.u, e.v, c, i)
            arc(e.v, e.u, c, i)
        elif v_in:
            arc(e.u, e.v, c, i)
        else:
            arc(e.v, e.u, c, i)

    picked = minimum_integral_cover(arcs, arc_costs, fr)
    AREA_COVER_STATS["bb_nodes"] += picked.nodes
    if picked.root_integral:
        AREA_COVER_STATS["root_integral"] += 1
    chosen = sorted({arc_src[t] for t in picked.indices})
    cost = sum((costs[i] for i in chosen), ZERO)

    if solution is None:
        solution = solve_lp(
            build_lp_from_edges(edges, costs, fr, mode_label="undirected")
        )
    parts = cost_partition(solution, r_mask)
    bound = parts.delta + 2 * parts.gamma_bar
    AREA_COVER_STATS["bound_checks"] += 1
    if cost > bound:
        AREA_COVER_STATS["bound_violations"] += 1
        raise InvariantError(
            f"area cover cost {rat_str(cost)} exceeds its bound {rat_str(bound)}"
        )

    chosen_edges = [edges[i] for i in chosen]
    for b, val in fr.positives():
        if len(delta(chosen_edges, b)) < val:
            raise InvariantError(f"area cover leaves {b!r} uncovered")
    return chosen


@dataclass(frozen=True)
class FailureCertificate:
    """A positive pair violating both halves of skew supermodularity.

    Normalized so inner(a) lies inside the boundary of b; the pair is
    independent (asserted), which is exactly what the growing loop exploits
    when it absorbs inner(a) into the next candidate set. Both slacks are
    negative by construction.
    """

    a: object
    b: object
    value_a: int
    value_b: int
    supermodular_slack: int
    co_supermodular_slack: int


def _normalize_certificate(h, a0, b0):
    """Orient a doubly violating pair so inner(a) sits inside boundary(b).

    Swapping a biset for its co-biset, or the two bisets for each other,
    preserves the double violation when h is symmetric, so searching the
    four orientations in a fixed order keeps the output deterministic.
    """
    candidates = ((a0, b0), (a0.co(), b0), (b0, a0), (b0.co(), a0))
    for a, b in candidates:
        if a.inner and a.inner & ~b.boundary == 0:
            break
    else:
        raise InvariantError(
            "doubly violating pair admits no independence witness"
        )
    va = h.evaluate(a)
    vb = h.evaluate(b)
    sup = h.evaluate(a.meet(b)) + h.evaluate(a.join(b)) - va - vb
    co = h.evaluate(a.diff(b)) + h.evaluate(b.diff(a)) - va - vb
    if va <= 0 or vb <= 0:
        raise InvariantError("certificate normalization lost positivity")
    if sup >= 0 or co >= 0:
        raise InvariantError("certificate normalization lost the violation")
    rel = relation(a, b)
    if not rel.independent:
        raise InvariantError("failure certificate pair is not independent")
    return FailureCertificate(a, b, va, vb, sup, co)


def _find_certificate(h):
    """First positive pair violating both inequalities, enumeration order."""
    pos = h.positives()
    for i in range(len(pos)):
        a, va = pos[i]
        for j in range(i + 1, len(pos)):
            b, vb = pos[j]
            if (
                h.evaluate(a.meet(b)) + h.evaluate(a.join(b)) < va + vb
                and h.evaluate(a.diff(b)) + h.evaluate(b.diff(a)) < va + vb
            ):
                return _normalize_certificate(h, a, b)
    return None


def _skew_cover(instance, h, exclude):
    """Shared engine behind skew_cover.

    Returns (edge index list, None, entry LP value) on success and
    (None, FailureCertificate, entry LP value) on failure. Rounds one edge
    per LP solve: among edges at value >= 1/2 in the optimal vertex, the
    one with the largest value, ties by edge id. Rounding works on row
    arithmetic; the certificate path materializes the residual function.
    """
    edges, costs = instance.finite_edges()
    banned = set(exclude)
    avail = [i for i in range(len(edges)) if i not in banned]
    entry_rows = build_lp_from_edges(
        [edges[i] for i in avail], [costs[i] for i in avail], h
    ).rows
    # live rows keyed by original edge ids: (biset, need, original-id mask)
    rows = []
    for row in entry_rows:
        orig = 0
        mm = row.mask
        while mm:
            b = (mm & -mm).bit_length() - 1
            orig |= 1 << avail[b]
            mm &= mm - 1
        rows.append((row.biset, row.rhs, orig))

    half = rat(1, 2)
    chosen = []
    tau_entry = None
    while True:
        live = [(b, need, mask) for b, need, mask in rows if need > 0]
        if not live:
            break
        lp = BisetLP(
            edges=[edges[i] for i in avail],
            costs=[costs[i] for i in avail],
            rows=[
                LPRow(
                    biset=b,
                    rhs=need,
                    mask=_compress(mask, avail),
                )
                for b, need, mask in live
            ],
            mode="undirected",
            function_name=h.name,
        )
        sol = solve_lp(lp)
        if tau_entry is None:
            tau_entry = sol.value
        pick = None
        for j in range(len(avail)):
            if sol.x[j] >= half and (pick is None or sol.x[j] > sol.x[pick]):
                pick = j
        if pick is None:
            h_cur = residual(h, [edges[i] for i in chosen]) if chosen else h
            cert = _find_certificate(h_cur)
            if cert is None:
                raise InvariantError(
                    "no edge reached 1/2 in an optimal vertex and no failure "
                    "certificate exists"
                )
            return None, cert, tau_entry
        orig = avail[pick]
        chosen.append(orig)
        bit = 1 << orig
        rows = [
            (b, need - (1 if mask & bit else 0), mask & ~bit)
            for b, need, mask in rows
        ]
        avail.remove(orig)
    if chosen:
        cost = sum((costs[i] for i in chosen), ZERO)
        if cost > 2 * tau_entry:
            raise InvariantError(
                f"rounded cover cost {rat_str(cost)} exceeds twice the entry "
                f"LP value {rat_str(tau_entry)}"
            )
    return sorted(chosen), None, tau_entry


def _compress(mask, avail):
    out = 0
    for j, e in enumerate(avail):
        if (mask >> e) & 1:
            out |= 1 << j
    return out


def skew_cover(instance, h, exclude=()):
    """2-approximate cover of h by iterative LP rounding, or a certificate.

    On success the edge set costs at most twice the LP value seen on entry
    (asserted in exact arithmetic). On failure the first doubly violating
    positive pair, in enumeration order, comes back as a normalized
    FailureCertificate. `exclude` removes edges from consideration, for
    callers whose residual function already accounts for them.
    """
    picked, cert, _tau = _skew_cover(instance, h, exclude)
    if cert is not None:
        return cert
    return picked


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class IterationRecord:
    """One completed round: seed set, its cost, and the x-cost partition."""

    index: int
    r_mask: int
    cost_ji: object
    gamma: object
    delta: object
    gamma_bar: object
    growth_rounds: int


@dataclass
class CoverReport:
    """Everything a finished run claims, with the evidence attached.

    checks carries each named inequality the analysis relies on, recorded
    with its exact outcome; a failed mandatory check raises CoverCheckError
    with the partially built report attached.
    """

    j: list
    iterations: list
    ell: int
    tau: object
    ratio_bound: object
    checks: list
    cost: object
    no_guarantee: bool = False
    best_index: int = 0
    early_exit: bool = False
    completed: int = 0


def _required(report, name, ok, detail):
    report.checks.append(CheckRecord(name, bool(ok), detail))
    if not ok:
        raise CoverCheckError(f"{name}: {detail}", report=report)


def growing_cover(instance, f, r1_mask, ell, solution=None):
    """Iterated area rounds with certificate-driven seed growth.

    Each round covers the area variant for the current seed set R, absorbs
    the union of small positive inner parts of the residual into a
    candidate next seed (grown lazily: start from R, and grow by inner(a)
    of each failure certificate the residual rounding step produces), and
    pairs the round's edges with a 2-approximate cover of what remains.
    Rounds where the seed did not grow terminate the loop early, at total
    cost at most 4 * tau. The cheapest round (by its own cost, ties first)
    supplies the returned cover.

    Preconditions: the seed must be a proper nonempty node set of size at
    least 2*k_f - 1; rounds that run out of room are discarded, and running
    out of room before any round completes raises PreconditionError.
    """
    n = instance.n
    full = (1 << n) - 1
    edges, costs = instance.finite_edges()
    if ell < 1:
        raise ValueError("iteration budget must be >= 1")
    kf = compute_k_f(f)
    if kf.already_covered:
        tau = solution.value if solution is not None else ZERO
        return CoverReport(
            j=[],
            iterations=[],
            ell=ell,
            tau=tau,
            ratio_bound=approximation_ratio(ell),
            checks=[
                CheckRecord(
                    "cover-complete", True, "function nonpositive everywhere"
                )
            ],
            cost=ZERO,
        )
    if r1_mask == 0 or r1_mask & ~full or r1_mask == full:
        raise PreconditionError("seed must be a nonempty proper node subset")
    if popcount(r1_mask) < 2 * kf.value - 1:
        raise PreconditionError(
            f"seed needs at least {2 * kf.value - 1} nodes, got "
            f"{popcount(r1_mask)}"
        )
    if solution is None:
        solution = solve_lp(build_biset_lp(instance, f, mode="undirected"))
    tau = solution.value
    growth_factor = 2 * kf.value * kf.value - 3 * kf.value + 2

    checks = []
    iterations = []
    rounds_data = []  # (ji indices, residual cover indices, costs)
    report = CoverReport(
        j=[],
        iterations=iterations,
        ell=ell,
        tau=tau,
        ratio_bound=approximation_ratio(ell),
        checks=checks,
        cost=ZERO,
    )

    def cost_of(indices):
        return sum((costs[i] for i in indices), ZERO)

    r = r1_mask
    early = False
    i = 1
    while i <= ell:
        parts = cost_partition(solution, r)
        _required(
            report,
            f"partition-identity-{i}",
            parts.gamma + parts.delta + parts.gamma_bar == tau,
            f"gamma+delta+gamma_bar = {rat_str(parts.gamma + parts.delta + parts.gamma_bar)}"
            f" vs tau = {rat_str(tau)}",
        )
        first = area_cover(instance, f, r, solution=solution)
        f_first = residual(f, [edges[t] for t in first])
        small_union = positive_union(f_first, kf.value)
        grown_cap = r | small_union
        _required(
            report,
            f"growth-bound-{i}",
            popcount(grown_cap) <= popcount(r) * growth_factor,
            f"|R u small-positives| = {popcount(grown_cap)} vs "
            f"{popcount(r)} * {growth_factor}",
        )

        r_next = r
        rounds = 0
        result = None
        while True:
            if popcount(full & ~r_next) < 2 * kf.value - 1:
                break
            second = area_cover(instance, f, full & ~r_next, solution=solution)
            ji = sorted(set(first) | set(second))
            h = residual(f, [edges[t] for t in ji])
            picked, cert, tau_res = _skew_cover(instance, h, exclude=ji)
            if picked is not None:
                result = (second, ji, picked, tau_res)
                break
            rounds += 1
            grown = cert.a.inner
            if grown & ~small_union:
                raise InvariantError(
                    "certificate inner part is not among the small positive "
                    "inner parts"
                )
            if not grown & ~r_next:
                raise InvariantError(
                    "certificate inner part lies inside the candidate seed "
                    "it should enlarge"
                )
            r_next |= grown
            if r_next & ~grown_cap:
                raise InvariantError("candidate seed left its permitted range")
        if result is None:
            break
        second, ji, resid_cover, tau_res = result
        parts_next = cost_partition(solution, r_next)
        c_first = cost_of(first)
        c_second = cost_of(second)
        c_ji = cost_of(ji)
        _required(
            report,
            f"area-bound-first-{i}",
            c_first <= parts.delta + 2 * parts.gamma_bar,
            f"{rat_str(c_first)} <= {rat_str(parts.delta + 2 * parts.gamma_bar)}",
        )
        _required(
            report,
            f"area-bound-second-{i}",
            c_second <= parts_next.delta + 2 * parts_next.gamma,
            f"{rat_str(c_second)} <= "
            f"{rat_str(parts_next.delta + 2 * parts_next.gamma)}",
        )
        c_resid = cost_of(resid_cover)
        if tau_res is None:
            _required(
                report,
                f"residual-bound-{i}",
                c_resid == ZERO,
                "residual already nonpositive",
            )
        else:
            _required(
                report,
                f"residual-bound-{i}",
                c_resid <= 2 * tau_res,
                f"{rat_str(c_resid)} <= 2 * {rat_str(tau_res)}",
            )
        iterations.append(
            IterationRecord(
                index=i,
                r_mask=r,
                cost_ji=c_ji,
                gamma=parts.gamma,
                delta=parts.delta,
                gamma_bar=parts.gamma_bar,
                growth_rounds=rounds,
            )
        )
        rounds_data.append((ji, resid_cover, c_ji, c_resid))
        if r_next == r:
            early = True
            _required(
                report,
                f"early-exit-bound-{i}",
                c_ji <= 2 * tau,
                f"{rat_str(c_ji)} <= 2 * {rat_str(tau)}",
            )
            break
        r = r_next
        i += 1

    completed = len(iterations)
    if completed == 0:
        raise PreconditionError(
            "not enough room outside the seed to complete a single round"
        )
    report.completed = completed
    report.early_exit = early

    total = sum((rec.cost_ji for rec in iterations), ZERO)
    _required(
        report,
        "telescoping-sum",
        total <= 2 * tau * (completed + 1),
        f"sum c(J_i) = {rat_str(total)} <= "
        f"{rat_str(2 * tau * (completed + 1))}",
    )
    best = 0
    for t in range(1, completed):
        if iterations[t].cost_ji < iterations[best].cost_ji:
            best = t
    min_bound = 2 * tau * rat(completed + 1, completed)
    _required(
        report,
        "best-iteration",
        iterations[best].cost_ji <= min_bound,
        f"min c(J_i) = {rat_str(iterations[best].cost_ji)} <= "
        f"{rat_str(min_bound)}",
    )

    ji, resid_cover, c_ji, c_resid = rounds_data[best]
    overlap = set(ji) & set(resid_cover)
    if overlap:
        raise InvariantError(
            f"round edges and residual cover overlap: {sorted(overlap)}"
        )
    j = sorted(set(ji) | set(resid_cover))
    report.j = j
    report.cost = c_ji + c_resid
    report.best_index = iterations[best].index

    j_mask = 0
    for t in j:
        j_mask |= 1 << t
    uncovered = None
    for row in solution.lp.rows:
        if popcount(row.mask & j_mask) < row.rhs:
            uncovered = row.biset
            break
    _required(
        report,
        "cover-complete",
        uncovered is None,
        "all positive bisets covered" if uncovered is None
        else f"uncovered: {uncovered!r}",
    )
    total_bound = 2 * tau * rat(2 * completed + 1, completed)
    _required(
        report,
        "total-bound",
        report.cost <= total_bound,
        f"c(J) = {rat_str(report.cost)} <= {rat_str(total_bound)}",
    )
    return report


def brute_force_opt(instance, f, cap=16):
    """Exact minimum-cost cover of f by subset search.

    Deliberately independent of the LP machinery: this is the oracle the
    solvers are audited against. Edges are tried cheapest first, inclusion
    before exclusion, with exact cost pruning against the incumbent and a
    reachability prune per constraint.
    """
    edges, costs = instance.finite_edges()
    m = len(edges)
    if m > cap:
        raise EnumerationCapError(
            f"{m} finite edges exceed the oracle cap {cap}"
        )
    rows = []
    for b, val in f.positives():
        mask = cover_mask(edges, b)
        if popcount(mask) < val:
            raise InfeasibleCoverError(
                f"{b!r} needs {val} covering edges but only "
                f"{popcount(mask)} exist",
                witness=b,
            )
        rows.append((mask, val))
    if not rows:
        return []

    order = sorted(range(m), key=lambda i: (costs[i], i))
    suffix = [0] * (m + 1)
    for pos in range(m - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] | (1 << order[pos])

    state = {"cost": None, "mask": 0}

    def dfs(pos, chosen, cost):
        if state["cost"] is not None and cost >= state["cost"]:
            return
        done = True
        rest = suffix[pos]
        for mask, val in rows:
            have = popcount(mask & chosen)
            if have < val:
                done = False
                if have + popcount(mask & rest) < val:
                    return
        if done:
            state["cost"] = cost
            state["mask"] = chosen
            return
        e = order[pos]
        dfs(pos + 1, chosen | (1 << e), cost + costs[e])
        dfs(pos + 1, chosen, cost)

    dfs(0, 0, ZERO)
    if state["cost"] is None:
        raise InfeasibleCoverError("no cover exists")
    return ids_of(state["mask"])


def solve_kcs(instance, k, r1_mask=None, strict=False):
    """End-to-end minimum-cost k-connected spanning subgraph approximation.

    Computes the iteration budget from the population formula, seeds the
    growing loop with the default (or caller-supplied) node set, and falls
    back to plain iterative rounding, then to the exact search, when the
    instance is too small for even one full round. The returned subgraph is
    re-verified k-connected, and when the size guarantee held the cost is
    asserted within ratio_bound * tau.
    """
    n = instance.n
    if k < 1:
        raise ValueError("k must be >= 1")
    if k >= n:
        raise InfeasibleCoverError(
            f"no simple graph on {n} nodes is {k}-connected"
        )
    edges, costs = instance.finite_edges()
    ok, cert = is_k_connected(n, edges, k, strict=strict)
    if not ok:
        raise InfeasibleCoverError(
            f"finite-cost subgraph is only {cert.k_achieved}-connected",
            witness=cert.witness_cut,
        )

    f = kcs_view(k, n)
    kf = compute_k_f(f)
    ell = iteration_budget_kcs(k, n)
    ratio = approximation_ratio(ell)
    if kf.already_covered:
        return CoverReport(
            j=[], iterations=[], ell=ell, tau=ZERO, ratio_bound=ratio,
            checks=[CheckRecord("cover-complete", True,
                                "function nonpositive everywhere")],
            cost=ZERO,
        )
    r1 = r1_mask if r1_mask is not None else default_r1(instance, kf.value)
    no_guarantee = popcount(r1) < 2 * kf.value - 1 or not size_guarantee_holds(
        kf.value, popcount(r1), n, ell
    )

    master = solve_lp(build_biset_lp(instance, f, mode="undirected"))
    tau = master.value

    report = None
    try:
        report = growing_cover(instance, f, r1, ell, solution=master)
    except PreconditionError as exc:
        reason = str(exc)
    if report is None:
        checks = [CheckRecord("growing-skipped", True, reason)]
        picked, _cert, tau_entry = _skew_cover(instance, f, ())
        if picked is not None:
            j = picked
            cost = sum((costs[i] for i in j), ZERO)
            checks.append(
                CheckRecord(
                    "rounding-bound",
                    cost <= 2 * tau_entry if tau_entry is not None else True,
                    f"c(J) = {rat_str(cost)} <= 2 * LP value",
                )
            )
        else:
            exact = minimum_integral_cover(edges, costs, f)
            j = list(exact.indices)
            cost = exact.cost
            checks.append(
                CheckRecord(
                    "exact-fallback",
                    True,
                    f"rounding certified a violating pair; exact optimum "
                    f"{rat_str(cost)} used",
                )
            )
        report = CoverReport(
            j=j, iterations=[], ell=ell, tau=tau, ratio_bound=ratio,
            checks=checks, cost=cost,
        )
        j_mask = 0
        for t in j:
            j_mask |= 1 << t
        uncovered = None
        for row in master.lp.rows:
            if popcount(row.mask & j_mask) < row.rhs:
                uncovered = row.biset
                break
        _required(
            report,
            "cover-complete",
            uncovered is None,
            "all positive bisets covered" if uncovered is None
            else f"uncovered: {uncovered!r}",
        )

    report.ell = ell
    report.ratio_bound = ratio
    report.no_guarantee = no_guarantee

    sol_edges = [edges[i] for i in report.j]
    ok2, cert3 = is_k_connected(n, sol_edges, k, strict=strict)
    _required(
        report,
        "final-connectivity",
        ok2,
        f"k_achieved = {cert3.k_achieved}" if ok2
        else f"solution only {cert3.k_achieved}-connected: "
        f"{cert3.witness_cut!r}",
    )
    ok_ratio = report.cost <= ratio * tau
    if no_guarantee:
        report.checks.append(
            CheckRecord(
                "approximation-ratio",
                ok_ratio,
                f"advisory (size guarantee off): c = {rat_str(report.cost)} "
                f"vs bound = {rat_str(ratio * tau)}",
            )
        )
    else:
        _required(
            report,
            "approximation-ratio",
            ok_ratio,
            f"c = {rat_str(report.cost)} <= {rat_str(ratio * tau)}",
        )
    return report
