"""Command line front end: ingest an instance, run the pipeline, report.

Exit codes: 0 on a clean run, 2 on a parse error or any failed assertion,
3 when the instance is infeasible (the blocking biset is printed).
"""

import argparse
import json
import sys
import time

from .bisets import ids_of, mask_of, set_enumeration_cap
from .covers import brute_force_opt, solve_kcs
from .errors import (
    BisetCoverError,
    CoverCheckError,
    InfeasibleCoverError,
    InvariantError,
    ParseError,
)
from .functions import CLASS_CHECKS, area_view, classify, kcs_view
from .instances import format_instance, parse_instance, random_instance
from .lp import build_biset_lp, dump_lp
from .rationals import ZERO, rat, rat_float, rat_str


def build_parser():
    p = argparse.ArgumentParser(
        prog="bisetcover",
        description="Approximate minimum-cost k-connected subgraphs with "
        "certified per-run bounds.",
    )
    p.add_argument("--input", metavar="PATH", help="instance file to solve")
    p.add_argument(
        "--k", type=int, help="connectivity target (overrides the header)"
    )
    p.add_argument(
        "--r1",
        metavar="IDS",
        help='comma-separated node ids seeding the first area, e.g. "0,1,2"',
    )
    p.add_argument(
        "--mode",
        choices=("kcs", "classify", "oracle"),
        default="kcs",
        help="kcs: solve; classify: test the objective against the function "
        "classes; oracle: solve and compare against the brute-force optimum",
    )
    p.add_argument(
        "--strict",
        action="store_true",
        help="verify connectivity over every node pair, not the reduced set",
    )
    p.add_argument(
        "--seed",
        type=int,
        help="generate a random instance instead of reading --input",
    )
    p.add_argument("--json", metavar="PATH", help="write the report here")
    p.add_argument(
        "--max-n",
        type=int,
        help="enumeration cap (also the size of --seed instances)",
    )
    p.add_argument(
        "--lp-dump", metavar="PATH", help="write the master relaxation here"
    )
    return p


def _num(x):
    return {"rat": rat_str(x), "approx": rat_float(x)}


def _parse_r1(text, n):
    try:
        ids = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ParseError(0, f"--r1 must be comma-separated integers: {text!r}")
    if not ids:
        raise ParseError(0, "--r1 names no nodes")
    bad = [i for i in ids if i < 0 or i >= n]
    if bad:
        raise ParseError(0, f"--r1 ids out of range 0..{n - 1}: {bad}")
    return mask_of(ids)


def _load_instance(args):
    if args.input is not None:
        with open(args.input) as fh:
            return parse_instance(fh.read())
    if args.seed is not None:
        n = args.max_n if args.max_n is not None else 6
        k = args.k if args.k is not None else 2
        return random_instance(n, k, seed=args.seed)
    raise ParseError(0, "one of --input or --seed is required")


def _report_dict(instance, k, rep, wall, mode):
    return {
        "mode": mode,
        "n": instance.n,
        "k": k,
        "instance": format_instance(instance),
        "solution": {
            "indices": list(rep.j),
            "edges": [
                [e.u, e.v]
                for e in (instance.finite_edges()[0][i] for i in rep.j)
            ],
        },
        "cost": _num(rep.cost),
        "tau": _num(rep.tau),
        "ell": rep.ell,
        "ratio_bound": _num(rep.ratio_bound),
        "no_guarantee": rep.no_guarantee,
        "completed": rep.completed,
        "best_index": rep.best_index,
        "early_exit": rep.early_exit,
        "iterations": [
            {
                "index": it.index,
                "r": ids_of(it.r_mask),
                "cost_ji": _num(it.cost_ji),
                "gamma": _num(it.gamma),
                "delta": _num(it.delta),
                "gamma_bar": _num(it.gamma_bar),
                "growth_rounds": it.growth_rounds,
            }
            for it in rep.iterations
        ],
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in rep.checks
        ],
        "wall_time_s": wall,
    }


def _print_solve_report(doc, out):
    sol = doc["solution"]
    print(f"n={doc['n']} k={doc['k']} mode={doc['mode']}", file=out)
    print(
        f"solution: {len(sol['indices'])} edges "
        f"{[tuple(e) for e in sol['edges']]}",
        file=out,
    )
    print(
        f"cost = {doc['cost']['rat']} (~{doc['cost']['approx']:.4g})",
        file=out,
    )
    print(
        f"tau = {doc['tau']['rat']}  ell = {doc['ell']}  "
        f"ratio bound = {doc['ratio_bound']['rat']}  "
        f"no_guarantee = {doc['no_guarantee']}",
        file=out,
    )
    for it in doc["iterations"]:
        print(
            f"  iter {it['index']}: R={it['r']} "
            f"c(J)={it['cost_ji']['rat']} "
            f"gamma={it['gamma']['rat']} delta={it['delta']['rat']} "
            f"gamma_bar={it['gamma_bar']['rat']} "
            f"growth_rounds={it['growth_rounds']}",
            file=out,
        )
    for c in doc["checks"]:
        tag = "PASS" if c["passed"] else "FAIL"
        print(f"  check {c['name']}: {tag} ({c['detail']})", file=out)
    if "oracle" in doc:
        o = doc["oracle"]
        print(
            f"oracle: opt = {o['opt_cost']['rat']} "
            f"true ratio = {o['true_ratio']['rat']} "
            f"(~{o['true_ratio']['approx']:.4g})",
            file=out,
        )
    print(f"wall time = {doc['wall_time_s']:.3f}s", file=out)


def _run_classify(instance, k, r1_mask, args, out):
    f = kcs_view(k, instance.n)
    name = f"kcs(k={k})"
    if r1_mask is not None:
        f = area_view(f, r1_mask)
        name = f"area(kcs(k={k}), R={ids_of(r1_mask)})"
    rep = classify(f)
    doc = {
        "mode": "classify",
        "n": instance.n,
        "k": k,
        "function": name,
        "verdicts": {
            check: {
                "holds": rep.holds(check),
                "counterexample": (
                    None
                    if rep.counterexample(check) is None
                    else repr(rep.counterexample(check))
                ),
            }
            for check in CLASS_CHECKS
        },
    }
    print(f"function: {name}", file=out)
    for check in CLASS_CHECKS:
        v = doc["verdicts"][check]
        line = f"  {check}: {'holds' if v['holds'] else 'fails'}"
        if v["counterexample"]:
            line += f"  counterexample {v['counterexample']}"
        print(line, file=out)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        if args.max_n is not None:
            set_enumeration_cap(args.max_n)
        instance = _load_instance(args)
        k = args.k if args.k is not None else instance.k
        r1_mask = (
            _parse_r1(args.r1, instance.n) if args.r1 is not None else None
        )

        if args.lp_dump:
            dump_lp(build_biset_lp(instance, kcs_view(k, instance.n)), args.lp_dump)

        if args.mode == "classify":
            return _run_classify(instance, k, r1_mask, args, out)

        start = time.perf_counter()
        rep = solve_kcs(instance, k, r1_mask=r1_mask, strict=args.strict)
        wall = time.perf_counter() - start
        doc = _report_dict(instance, k, rep, wall, args.mode)

        if args.mode == "oracle":
            opt = brute_force_opt(instance, kcs_view(k, instance.n))
            _, costs = instance.finite_edges()
            opt_cost = sum((costs[i] for i in opt), ZERO)
            true_ratio = rep.cost / opt_cost if opt_cost > 0 else rat(1)
            doc["oracle"] = {
                "opt_indices": list(opt),
                "opt_cost": _num(opt_cost),
                "true_ratio": _num(true_ratio),
            }

        _print_solve_report(doc, out)
        if args.json:
            with open(args.json, "w") as fh:
                json.dump(doc, fh, indent=2, sort_keys=True)
                fh.write("\n")
        return 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleCoverError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"uncovered biset: {exc.witness!r}", file=sys.stderr)
        return 3
    except (CoverCheckError, InvariantError, AssertionError) as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return 2
    except (BisetCoverError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
