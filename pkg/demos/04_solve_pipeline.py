"""
The full pipeline on one instance
=================================

solve_kcs runs the whole chain: feasibility, the iteration budget from the
instance size, repeated area covers over a growing node set, half-integral
rounding of the leftover demand, and a report in which every inequality
the analysis relies on was checked at runtime on this very run.
"""

from bisetcover import certify_solution, parse_instance, rat_str, solve_kcs

lines = ["8 28 2"]
for u in range(8):
    for v in range(u + 1, 8):
        lines.append(f"{u} {v} 1")
inst = parse_instance("\n".join(lines))

rep = solve_kcs(inst, 2)
print("edges chosen:", len(rep.j), "cost:", rat_str(rep.cost))
print("LP lower bound tau:", rat_str(rep.tau))
print("iteration budget:", rep.ell, " ratio bound:", rat_str(rep.ratio_bound))
print("size guarantee waived:", rep.no_guarantee)

for it in rep.iterations:
    print(
        f"iteration {it.index}: seed nodes {bin(it.r_mask)}, "
        f"cost {rat_str(it.cost_ji)}, growth rounds {it.growth_rounds}"
    )

print("runtime checks:")
for c in rep.checks:
    print(f"  {c.name}: {'PASS' if c.passed else 'FAIL'} ({c.detail})")

# the report plus the instance is enough to re-verify the run from scratch
edges, _ = inst.finite_edges()
chosen = [(edges[i].u, edges[i].v) for i in rep.j]
res = certify_solution(inst, 2, chosen, rep)
print("independent certification:", res.passed)
