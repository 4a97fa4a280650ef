"""
The covering LP, exactly
========================

Every cover has a fractional relaxation: choose x in [0,1] per edge so
that each positive biset gets x-mass at least its demand across the edges
covering it. The simplex here runs on exact rationals, so optimal values
are equalities, not tolerances.
"""

from bisetcover import build_biset_lp, dump_lp, kcs_view, parse_instance, rat_str, solve_lp

# the 4-cycle with both chords, unit costs
inst = parse_instance(
    "4 6 2\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n0 2 1\n1 3 1"
)
f = kcs_view(2, 4)
lp = build_biset_lp(inst, f)
print("rows after reduction:", len(lp.rows), " edges:", len(lp.edges))

sol = solve_lp(lp)
print("LP value:", rat_str(sol.value))
print("x:", [rat_str(x) for x in sol.x])

# a 5-cycle forces a genuinely fractional vertex: every edge at one half
c5 = parse_instance("5 5 2\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1")
sol5 = solve_lp(build_biset_lp(c5, kcs_view(2, 5)))
print("5-cycle LP value:", rat_str(sol5.value))
print("5-cycle x:", [rat_str(x) for x in sol5.x])

# the text dump is one constraint per line, exact rationals throughout
print()
print(dump_lp(lp)[:300], "...")
