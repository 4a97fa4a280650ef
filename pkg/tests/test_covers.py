import pytest

from bisetcover.bisets import Biset, Edge, delta, mask_of, popcount
from bisetcover.covers import (
    AREA_COVER_STATS,
    FailureCertificate,
    area_cover,
    approximation_ratio,
    brute_force_opt,
    default_r1,
    exact_directed_cover,
    growing_cover,
    iteration_budget_kcs,
    minimum_integral_cover,
    size_guarantee_holds,
    skew_cover,
    solve_kcs,
    _find_certificate,
    _normalize_certificate,
)
from bisetcover.errors import (
    CoverCheckError,
    EnumerationCapError,
    InfeasibleCoverError,
    InvariantError,
    PreconditionError,
)
from bisetcover.functions import (
    BisetFunctionView,
    area_view,
    classify,
    compute_k_f,
    kcs_view,
    positive_union,
    residual,
)
from bisetcover.instances import Instance, parse_instance, random_instance
from bisetcover.lp import build_biset_lp, build_lp_from_edges, solve_lp
from bisetcover.rationals import ZERO, rat
from bisetcover.verify import is_k_connected


def complete_instance(n, k, cost=1):
    lines = [f"{n} {n * (n - 1) // 2} {k}"]
    for u in range(n):
        for v in range(u + 1, n):
            lines.append(f"{u} {v} {cost}")
    return parse_instance("\n".join(lines))


def zero_view(n):
    return BisetFunctionView(n, lambda b: 0, name="zero")


# ---------------------------------------------------------------- thresholds


def test_iteration_budget_values():
    assert iteration_budget_kcs(2, 8) == 1
    assert iteration_budget_kcs(2, 25) == 1
    assert iteration_budget_kcs(2, 26) == 2
    assert iteration_budget_kcs(2, 97) == 2
    assert iteration_budget_kcs(2, 98) == 3
    assert iteration_budget_kcs(3, 27) == 1


def test_iteration_budget_floor_and_k1_cap():
    assert iteration_budget_kcs(2, 4) == 1  # below threshold, floored
    assert iteration_budget_kcs(1, 7) == 7  # degenerate test, capped at n
    with pytest.raises(ValueError):
        iteration_budget_kcs(0, 5)


def test_approximation_ratio_values():
    assert approximation_ratio(1) == rat(6)
    assert approximation_ratio(2) == rat(5)
    assert approximation_ratio(3) == rat(14, 3)


def test_size_guarantee():
    # k_f = 2: factor 4, seed 3: need n >= 3 * (4**ell + 1)
    assert size_guarantee_holds(2, 3, 15, 1)
    assert not size_guarantee_holds(2, 3, 14, 1)
    assert size_guarantee_holds(2, 3, 51, 2)
    assert size_guarantee_holds(1, 1, 2, 5)  # factor 1


def test_default_r1_degree_then_id():
    inst = parse_instance("5 5 2\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n3 4 inf")
    # finite degrees: 0 -> 3, 1 -> 2, 2 -> 2, 3 -> 1, 4 -> 0
    assert default_r1(inst, 2) == mask_of([0, 1, 2])
    assert default_r1(inst, 1) == mask_of([0])


# ------------------------------------------------------------- exact covers


def test_exact_cover_zero_function():
    edges = [Edge(0, 1), Edge(1, 2)]
    assert exact_directed_cover(edges, [1, 1], zero_view(3)) == []


def test_exact_cover_directed_k3_area():
    arcs = []
    for u in range(3):
        for v in range(3):
            if u != v:
                arcs.append(Edge(u, v, oriented=True))
    f = area_view(kcs_view(1, 3), mask_of([0]))
    picked = exact_directed_cover(arcs, [1] * 6, f)
    assert len(picked) == 2
    # every arc of the optimum ends at the hub once singletons are covered
    res = minimum_integral_cover(arcs, [1] * 6, f)
    assert res.cost == rat(2)
    # independent oracle: enumerate all arc subsets
    best = None
    for mask in range(1 << 6):
        sub = [arcs[i] for i in range(6) if (mask >> i) & 1]
        ok = True
        for b, val in f.positives():
            if sum(1 for a in sub if a.u != a.v and _arc_covers(a, b)) < val:
                ok = False
                break
        if ok and (best is None or popcount(mask) < best):
            best = popcount(mask)
    assert best == 2


def _arc_covers(a, b):
    return bool((1 << a.u) & b.inner) and bool((1 << a.v) & b.co_set)


def test_exact_cover_forced_edge():
    # the positive biset ({0},{0,1}) is covered only by the 0-2 edge
    f = kcs_view(2, 3)
    edges = [Edge(0, 1), Edge(1, 2), Edge(0, 2)]
    picked = exact_directed_cover(edges, [1, 1, 5], f)
    assert 2 in picked


def test_exact_cover_infeasible():
    f = kcs_view(2, 4)
    with pytest.raises(InfeasibleCoverError):
        exact_directed_cover([Edge(0, 1)], [1], f)


def test_exact_cover_matches_brute_force():
    for seed in range(6):
        inst = random_instance(5, 2, seed=seed)
        f = kcs_view(2, 5)
        edges, costs = inst.finite_edges()
        res = minimum_integral_cover(edges, costs, f)
        oracle = brute_force_opt(inst, f)
        assert res.cost == sum((costs[i] for i in oracle), ZERO)


def test_directed_relaxation_integral():
    # directed instances with positively intersecting supermodular objective
    for seed in range(10):
        inst = random_instance(5, 2, seed=100 + seed)
        f = kcs_view(2, 5)
        r = default_r1(inst, compute_k_f(f).value)
        fr = area_view(f, r)
        lp = build_biset_lp(inst, fr, mode="directed")
        try:
            sol = solve_lp(lp)
        except InfeasibleCoverError:
            continue
        res = minimum_integral_cover(lp.edges, lp.costs, fr)
        assert res.cost == sol.value
        assert res.root_integral


# ----------------------------------------------------------------- brute force


def test_brute_force_c4_with_chords():
    inst = complete_instance(4, 2)
    picked = brute_force_opt(inst, kcs_view(2, 4))
    edges, costs = inst.finite_edges()
    assert sum((costs[i] for i in picked), ZERO) == rat(4)


def test_brute_force_picks_cheaper_cover():
    view = BisetFunctionView(
        3, lambda b: 1 if (b.inner, b.outer) == (1, 1) else 0, name="point"
    )
    inst = parse_instance("3 2 1\n0 1 3\n0 2 5")
    assert brute_force_opt(inst, view) == [0]


def test_brute_force_zero_function():
    inst = complete_instance(4, 2)
    assert brute_force_opt(inst, zero_view(4)) == []


def test_brute_force_cap():
    inst = complete_instance(6, 2)
    with pytest.raises(EnumerationCapError):
        brute_force_opt(inst, kcs_view(2, 6), cap=10)


def test_brute_force_infeasible():
    inst = parse_instance("4 2 2\n0 1 1\n2 3 1")
    with pytest.raises(InfeasibleCoverError):
        brute_force_opt(inst, kcs_view(2, 4))


# ------------------------------------------------------------------ area cover


def test_area_cover_zero_function():
    inst = complete_instance(5, 2)
    assert area_cover(inst, zero_view(5), mask_of([0, 1, 2])) == []


def test_area_cover_full_ground_set():
    inst = complete_instance(5, 2)
    f = kcs_view(2, 5)
    assert area_cover(inst, f, mask_of([0, 1, 2, 3, 4])) == []


def test_area_cover_precondition():
    inst = complete_instance(5, 2)
    f = kcs_view(2, 5)  # k_f = 2, needs |R| >= 3
    with pytest.raises(PreconditionError):
        area_cover(inst, f, mask_of([0, 1]))
    # explicit override runs (and the per-call bound must still hold)
    area_cover(inst, f, mask_of([0, 1]), unchecked=True)


def test_area_cover_k6_bound_recorded():
    inst = complete_instance(6, 1)
    f = kcs_view(1, 6)
    before = AREA_COVER_STATS["bound_checks"]
    violations = AREA_COVER_STATS["bound_violations"]
    picked = area_cover(inst, f, mask_of([3]))
    assert AREA_COVER_STATS["bound_checks"] == before + 1
    assert AREA_COVER_STATS["bound_violations"] == violations
    # the undirected edge set covers the area variant
    edges, _ = inst.finite_edges()
    fr = area_view(f, mask_of([3]))
    chosen = [edges[i] for i in picked]
    for b, val in fr.positives():
        assert len(delta(chosen, b)) >= val


def test_area_cover_never_picks_inside_edges():
    inst = complete_instance(6, 2)
    f = kcs_view(2, 6)
    r = mask_of([0, 1, 2])
    picked = area_cover(inst, f, r)
    edges, _ = inst.finite_edges()
    for i in picked:
        e = edges[i]
        assert not ((r >> e.u) & 1 and (r >> e.v) & 1)


# ------------------------------------------------------------------ skew cover


def test_skew_cover_zero_function():
    inst = complete_instance(4, 2)
    assert skew_cover(inst, zero_view(4)) == []


def test_skew_cover_two_approx_when_skew():
    for seed in range(4):
        inst = random_instance(5, 2, seed=200 + seed)
        f = kcs_view(2, 5)
        out = skew_cover(inst, f)
        edges, costs = inst.finite_edges()
        if isinstance(out, FailureCertificate):
            assert out.supermodular_slack < 0
            assert out.co_supermodular_slack < 0
            continue
        tau = solve_lp(build_biset_lp(inst, f)).value
        cost = sum((costs[i] for i in out), ZERO)
        assert cost <= 2 * tau
        # the result actually covers f
        res = residual(f, [edges[i] for i in out])
        assert res.positives() == []


def test_skew_cover_respects_exclusion():
    inst = complete_instance(5, 2)
    f = kcs_view(2, 5)
    out = skew_cover(inst, f, exclude=(0, 4))
    assert not isinstance(out, FailureCertificate)
    assert 0 not in out and 4 not in out


def _doubly_violating_view(symmetric):
    a = Biset(mask_of([0]), mask_of([0, 1]), 5)
    b = Biset(mask_of([2, 3]), mask_of([0, 2, 3]), 5)
    hits = {(a.inner, a.outer), (b.inner, b.outer)}
    if symmetric:
        for x in (a, b):
            c = x.co()
            hits.add((c.inner, c.outer))

    def ev(x):
        return 1 if (x.inner, x.outer) in hits else 0

    return BisetFunctionView(5, ev, name="pair", declared_symmetric=symmetric), a, b


def test_normalize_certificate_direct():
    h, a, b = _doubly_violating_view(symmetric=False)
    cert = _normalize_certificate(h, a, b)
    assert cert.a == a and cert.b == b
    assert cert.value_a == 1 and cert.value_b == 1
    assert cert.supermodular_slack == -2
    assert cert.co_supermodular_slack == -2
    assert cert.a.inner & ~cert.b.boundary == 0


def test_normalize_certificate_co_swap():
    h, a, b = _doubly_violating_view(symmetric=True)
    cert = _normalize_certificate(h, a.co(), b)
    assert cert.a == a  # co-swap restored the containment orientation
    assert cert.a.inner & ~cert.b.boundary == 0
    assert cert.supermodular_slack < 0 and cert.co_supermodular_slack < 0


def test_find_certificate_on_synthetic_pair():
    h, a, b = _doubly_violating_view(symmetric=False)
    cert = _find_certificate(h)
    assert cert is not None
    assert cert.a.inner & ~cert.b.boundary == 0


def test_find_certificate_none_for_kcs_k1():
    assert _find_certificate(kcs_view(1, 4)) is None


# ---------------------------------------------------------------- growing cover


def test_growing_cover_covered_function():
    inst = complete_instance(5, 2)
    rep = growing_cover(inst, zero_view(5), mask_of([0]), 1)
    assert rep.j == [] and rep.cost == ZERO


def test_growing_cover_seed_validation():
    inst = complete_instance(6, 2)
    f = kcs_view(2, 6)
    with pytest.raises(PreconditionError):
        growing_cover(inst, f, 0, 1)
    with pytest.raises(PreconditionError):
        growing_cover(inst, f, mask_of(range(6)), 1)
    with pytest.raises(PreconditionError):
        growing_cover(inst, f, mask_of([0]), 1)  # needs 2k_f - 1 = 3 nodes


def test_growing_cover_k8_complete():
    inst = complete_instance(8, 2)
    f = kcs_view(2, 8)
    rep = growing_cover(inst, f, default_r1(inst, 2), 1)
    assert rep.completed >= 1
    assert rep.tau == rat(8)
    assert rep.cost <= rat(48)
    assert all(c.passed for c in rep.checks)
    for rec in rep.iterations:
        assert rec.gamma + rec.delta + rec.gamma_bar == rep.tau
    edges, _ = inst.finite_edges()
    assert residual(f, [edges[i] for i in rep.j]).positives() == []


def test_growing_cover_too_cramped():
    inst = complete_instance(5, 2)
    f = kcs_view(2, 5)
    with pytest.raises(PreconditionError):
        growing_cover(inst, f, mask_of([0, 1, 2]), 1)


def test_growing_cover_check_failure_carries_report():
    # forcing an impossible budget shows errors carry the partial report
    inst = complete_instance(8, 2)
    f = kcs_view(2, 8)
    try:
        rep = growing_cover(inst, f, default_r1(inst, 2), 3)
    except CoverCheckError as exc:
        assert exc.report is not None
    else:
        assert rep.completed <= 3


# ------------------------------------------------------- independence after area


def test_residual_after_ideal_growth_is_independence_free():
    checked = 0
    for seed in range(8):
        inst = random_instance(7, 2, seed=300 + seed)
        f = kcs_view(2, 7)
        kf = compute_k_f(f)
        r = default_r1(inst, kf.value)
        sol = solve_lp(build_biset_lp(inst, f))
        first = area_cover(inst, f, r, solution=sol)
        edges, _ = inst.finite_edges()
        f_first = residual(f, [edges[t] for t in first])
        grown = r | positive_union(f_first, kf.value)
        full = (1 << 7) - 1
        if popcount(full & ~grown) < 2 * kf.value - 1:
            continue
        second = area_cover(inst, f, full & ~grown, solution=sol)
        h = residual(f, [edges[t] for t in sorted(set(first) | set(second))])
        rep = classify(
            h, checks=("independence_free", "positively_skew_supermodular")
        )
        assert rep.holds("independence_free"), rep.counterexample(
            "independence_free"
        )
        assert rep.holds("positively_skew_supermodular")
        checked += 1
    assert checked >= 1


# -------------------------------------------------------------------- solve_kcs


def test_solve_kcs_k_too_large():
    inst = complete_instance(4, 2)
    with pytest.raises(InfeasibleCoverError):
        solve_kcs(inst, 4)


def test_solve_kcs_infeasible_instance():
    inst = parse_instance("4 3 2\n0 1 1\n1 2 1\n2 3 1")
    with pytest.raises(InfeasibleCoverError):
        solve_kcs(inst, 2)


def test_solve_kcs_k1_tree():
    inst = parse_instance("5 4 1\n0 1 1\n1 2 1\n2 3 1\n3 4 1")
    rep = solve_kcs(inst, 1)
    assert rep.j == [0, 1, 2, 3]
    assert rep.cost == rat(4)
    assert not rep.no_guarantee
    assert all(c.passed for c in rep.checks)


def test_solve_kcs_k5_complete_k4():
    inst = complete_instance(5, 4)
    rep = solve_kcs(inst, 4)
    assert rep.j == list(range(10))
    assert rep.cost == rat(10)


def test_solve_kcs_k4():
    inst = complete_instance(4, 2)
    rep = solve_kcs(inst, 2)
    assert rep.cost == rat(4)
    edges, _ = inst.finite_edges()
    ok, _cert = is_k_connected(4, [edges[i] for i in rep.j], 2)
    assert ok


def test_solve_kcs_k8_report_fields():
    inst = complete_instance(8, 2)
    rep = solve_kcs(inst, 2)
    assert rep.ell == 1
    assert rep.ratio_bound == rat(6)
    assert rep.tau == rat(8)
    assert rep.cost <= rat(48)
    names = [c.name for c in rep.checks]
    assert "final-connectivity" in names
    assert "approximation-ratio" in names
    assert all(c.passed for c in rep.checks)


def test_solve_kcs_respects_r1_override():
    inst = complete_instance(8, 2)
    rep = solve_kcs(inst, 2, r1_mask=mask_of([5, 6, 7]))
    assert rep.cost <= rat(48)
    if rep.iterations:
        assert rep.iterations[0].r_mask == mask_of([5, 6, 7])


def test_solve_kcs_vs_oracle_random():
    for seed in range(8):
        inst = random_instance(6, 2, seed=400 + seed, max_finite_edges=12)
        rep = solve_kcs(inst, 2)
        f = kcs_view(2, 6)
        edges, costs = inst.finite_edges()
        opt = sum((costs[i] for i in brute_force_opt(inst, f)), ZERO)
        assert rep.cost <= rep.ratio_bound * opt
        assert rep.cost >= opt  # an exact optimum is a lower bound
        ok, _cert = is_k_connected(6, [edges[i] for i in rep.j], 2)
        assert ok
