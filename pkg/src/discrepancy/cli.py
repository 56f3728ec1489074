"""Command-line surface: build gadget instances, solve them, verify the
clique equivalences end to end, and benchmark solver scaling.

Exit codes: 0 success (and, for verify, equivalence holds), 1 verification
mismatch, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path
from time import perf_counter

from . import gadgets, instances, oracles, solvers
from .geometry import BLUE, RED, AnchoredBox, Box, HalfSpace, PointSet, WeightedPoint
from .numerics import format_rational, parse_rational

_GADGET_TYPES = (
    "bichromatic",
    "redblue",
    "empty-star",
    "star-disc",
    "empty-box",
    "box-disc",
    "halfspace",
    "net-halfspace",
    "net-box",
)

_BENCH_PROBLEMS = (
    "star-disc",
    "box-disc",
    "empty-star",
    "empty-box",
    "bichromatic-box",
    "redblue-disc",
)


def _build_gadget(kind: str, graph: gadgets.Graph, k: int, mu, raw: bool):
    if kind == "bichromatic":
        return gadgets.build_bichromatic_gadget(graph, k, normalize=not raw)
    if kind == "redblue":
        return gadgets.build_redblue_gadget(graph, k, normalize=not raw)
    if kind == "empty-star":
        return gadgets.build_empty_star_gadget(graph, k, mu if mu is not None else Fraction(2))
    if kind == "star-disc":
        return gadgets.build_star_discrepancy_gadget(graph, k)
    if kind == "empty-box":
        return gadgets.build_empty_box_gadget(graph, k)
    if kind == "box-disc":
        return gadgets.build_box_discrepancy_gadget(graph, k)
    if kind == "halfspace":
        return gadgets.build_halfspace_gadget(graph, k)
    if kind == "net-halfspace":
        return gadgets.build_net_instance(graph, k, "halfspace")
    if kind == "net-box":
        return gadgets.build_net_instance(graph, k, "box")
    raise ValueError(f"unknown gadget type: {kind}")


def _witness_doc(witness):
    if witness is None:
        return None
    if isinstance(witness, AnchoredBox):
        return {
            "type": "anchored-box",
            "upper": [format_rational(c) for c in witness.upper],
            "closure": "closed" if witness.closed else "open",
        }
    if isinstance(witness, Box):
        return {
            "type": "box",
            "lower": [format_rational(c) for c in witness.lower],
            "upper": [format_rational(c) for c in witness.upper],
            "closure": "closed" if witness.closed else "open",
        }
    if isinstance(witness, HalfSpace):
        return {
            "type": "halfspace",
            "normal": [format_rational(c) for c in witness.normal],
            "offset": format_rational(witness.offset),
        }
    raise TypeError(f"unknown witness type: {type(witness)!r}")


def _witness_text(witness) -> str:
    doc = _witness_doc(witness)
    if doc is None:
        return "none"
    if doc["type"] == "anchored-box":
        return f"{doc['closure']} anchored box upper=({', '.join(doc['upper'])})"
    if doc["type"] == "box":
        return (
            f"{doc['closure']} box lower=({', '.join(doc['lower'])}) "
            f"upper=({', '.join(doc['upper'])})"
        )
    return f"half-space normal=({', '.join(doc['normal'])}) offset={doc['offset']}"


def _solve_instance(inst: gadgets.GadgetInstance, workers: int, m=None):
    """Dispatch an instance to its solver; returns (value_str, witness, extra)."""
    problem = inst.problem
    ps = inst.points
    if problem == "bichromatic-box":
        rep = solvers.solve_bichromatic_box(ps, workers=workers)
        return str(rep.value), rep.witness, {"feasible": rep.feasible}
    if problem == "redblue-disc":
        rep = solvers.solve_redblue_box_discrepancy(ps, workers=workers)
        return format_rational(rep.value), rep.witness, {"side": rep.side}
    if problem == "empty-star":
        rep = solvers.solve_max_empty_star(ps, workers=workers)
        return format_rational(rep.volume), rep.witness, {}
    if problem == "star-disc":
        rep = solvers.solve_star_discrepancy(ps, workers=workers)
        return format_rational(rep.value), rep.witness, {"side": rep.side}
    if problem == "empty-box":
        rep = solvers.solve_max_empty_box(ps, workers=workers)
        return format_rational(rep.volume), rep.witness, {}
    if problem == "box-disc":
        rep = solvers.solve_box_discrepancy(ps, workers=workers)
        return format_rational(rep.value), rep.witness, {"side": rep.side}
    if problem == "halfspace-bichromatic":
        threshold = m if m is not None else int(inst.expected_positive)
        rep = solvers.solve_bichromatic_halfspace(ps, threshold, workers=workers)
        return (
            "feasible" if rep.feasible else "infeasible",
            rep.witness,
            {"m": threshold, "blue_weight": rep.value},
        )
    if problem in ("net-halfspace", "net-box"):
        family = "halfspace" if problem == "net-halfspace" else "box"
        mask = [p.in_s for p in ps.points]
        rep = solvers.verify_epsilon_net(ps, mask, inst.params.eps, family, workers=workers)
        return (
            "is-net" if rep.is_net else "not-a-net",
            rep.violator,
            {"eps": format_rational(inst.params.eps)},
        )
    raise ValueError(f"unknown problem: {problem}")


def _expected_outcome(inst: gadgets.GadgetInstance, clique: bool):
    """The solver outcome the clique oracle implies, as (kind, payload)."""
    problem = inst.problem
    if problem == "bichromatic-box":
        return ("eq" if clique else "le", inst.expected_positive if clique else inst.expected_positive - 1)
    if problem in ("redblue-disc", "star-disc", "box-disc"):
        return ("eq" if clique else "lt", inst.expected_positive)
    if problem in ("empty-star", "empty-box"):
        return ("eq", inst.expected_positive if clique else inst.expected_negative)
    if problem == "halfspace-bichromatic":
        return ("feasible", clique)
    if problem in ("net-halfspace", "net-box"):
        return ("is_net", not clique)
    raise ValueError(f"unknown problem: {problem}")


def _recompute_params(inst: gadgets.GadgetInstance) -> list[str]:
    """Cross-check the embedded params against the emitted points."""
    problems = []
    total = inst.points.total_weight
    if total != inst.params.N:
        problems.append(f"params.N={inst.params.N} but recomputed total weight {total}")
    if inst.points.dim != 2 * inst.params.k:
        problems.append(f"dim {inst.points.dim} != 2k = {2 * inst.params.k}")
    mu, C, V = inst.params.mu, inst.params.C, inst.params.V
    if mu is not None and C is not None:
        if C * mu ** (inst.params.n - 1) != 1:
            problems.append("C != 1/mu^(n-1)")
        if V is not None and V != C ** inst.params.k:
            problems.append("V != C^k")
    if inst.problem == "redblue-disc":
        origin_weight = sum(
            p.weight for p in inst.points.points if all(c == 0 for c in p.coords)
        )
        if inst.expected_positive != origin_weight + inst.params.k:
            problems.append(
                f"expected_positive {inst.expected_positive} != origin weight "
                f"{origin_weight} + k"
            )
    return problems


def _verify(kind: str, graph: gadgets.Graph, k: int, workers: int, out) -> int:
    inst = _build_gadget(kind, graph, k, None, raw=False)
    clique = oracles.has_clique(graph, k)
    param_problems = _recompute_params(inst)
    if param_problems:
        for line in param_problems:
            print(f"param mismatch: {line}", file=out)
        return 1
    ps = inst.points
    problem = inst.problem
    kind_, payload = _expected_outcome(inst, clique)
    if problem == "bichromatic-box":
        got = solvers.solve_bichromatic_box(ps, workers=workers).value
        ok = got == inst.expected_positive if clique else got <= inst.expected_positive - 1
    elif problem == "redblue-disc":
        got = solvers.solve_redblue_box_discrepancy(ps, workers=workers).value
        ok = got == inst.expected_positive if clique else got < inst.expected_positive
    elif problem == "empty-star":
        got = solvers.solve_max_empty_star(ps, workers=workers).volume
        ok = got == (inst.expected_positive if clique else inst.expected_negative)
    elif problem == "star-disc":
        got = solvers.solve_star_discrepancy(ps, workers=workers).value
        ok = got == inst.expected_positive if clique else got < inst.expected_positive
    elif problem == "empty-box":
        got = solvers.solve_max_empty_box(ps, workers=workers).volume
        ok = got == (inst.expected_positive if clique else inst.expected_negative)
    elif problem == "box-disc":
        got = solvers.solve_box_discrepancy(ps, workers=workers).value
        ok = got == inst.expected_positive if clique else got < inst.expected_positive
    elif problem == "halfspace-bichromatic":
        got = solvers.solve_bichromatic_halfspace(ps, int(inst.expected_positive), workers=workers).feasible
        ok = got == clique
    else:
        family = "halfspace" if problem == "net-halfspace" else "box"
        mask = [p.in_s for p in ps.points]
        got = solvers.verify_epsilon_net(ps, mask, inst.params.eps, family, workers=workers).is_net
        ok = got == (not clique)
    status = "match" if ok else "MISMATCH"
    print(
        f"{status}: type={kind} k={k} clique={clique} expected=({kind_}, {payload}) got={got}",
        file=out,
    )
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Benchmark harness.


def _random_point_set(rng: random.Random, d: int, n: int, colored: bool) -> PointSet:
    pts = []
    for idx in range(n):
        coords = tuple(Fraction(rng.randint(0, 64), 64) for _ in range(d))
        color = (BLUE if idx == 0 else rng.choice((RED, BLUE))) if colored else None
        pts.append(WeightedPoint(coords, color, 1))
    return PointSet(d, pts and tuple(pts) or ())


def _projected_candidates(problem: str, ps: PointSet) -> int:
    per_dim = []
    for j in range(ps.dim):
        coords = {p.coords[j] for p in ps.points}
        if problem in ("star-disc", "empty-star"):
            per_dim.append(len(coords | {Fraction(1)}))
        elif problem in ("box-disc", "empty-box"):
            lo = len(coords | {Fraction(0)})
            hi = len(coords | {Fraction(1)})
            per_dim.append(lo * hi)
        else:
            blues = {p.coords[j] for p in ps.points if p.color == BLUE}
            b = len(blues)
            per_dim.append(b * (b + 1) // 2 if b else 1)
    total = 1
    for x in per_dim:
        total *= x
    return total


def _bench_solve(problem: str, ps: PointSet):
    if problem == "star-disc":
        rep = solvers.solve_star_discrepancy(ps)
    elif problem == "box-disc":
        rep = solvers.solve_box_discrepancy(ps)
    elif problem == "empty-star":
        rep = solvers.solve_max_empty_star(ps)
    elif problem == "empty-box":
        rep = solvers.solve_max_empty_box(ps)
    elif problem == "bichromatic-box":
        rep = solvers.solve_bichromatic_box(ps)
    elif problem == "redblue-disc":
        rep = solvers.solve_redblue_box_discrepancy(ps)
    else:
        raise ValueError(f"unknown bench problem: {problem}")
    return rep.candidates_evaluated


BENCH_HEADER = ("problem", "d", "n_points", "candidates_evaluated", "elapsed_ms", "status")


def bench_scaling(problem: str, dims, sizes, seed: int = 0, cutoff: int = 2_000_000):
    """One row per (d, n): exact candidate count and wall time after one
    warm-up run; rows whose projected candidate count exceeds the cutoff
    are marked skipped instead of burning CI time."""
    rng = random.Random(seed)
    colored = problem in ("bichromatic-box", "redblue-disc")
    rows = []
    for d in dims:
        for n in sizes:
            ps = _random_point_set(rng, d, n, colored)
            projected = _projected_candidates(problem, ps)
            if projected > cutoff:
                rows.append((problem, d, n, projected, "", "skipped"))
                continue
            _bench_solve(problem, ps)  # warm-up
            t0 = perf_counter()
            cands = _bench_solve(problem, ps)
            elapsed_ms = (perf_counter() - t0) * 1000.0
            rows.append((problem, d, n, cands, f"{elapsed_ms:.3f}", "ok"))
    return rows


def _append_bench_rows(path: Path, rows) -> None:
    new_file = not path.exists()
    with path.open("a", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if new_file:
            writer.writerow(BENCH_HEADER)
        for row in rows:
            writer.writerow(row)


# ---------------------------------------------------------------------------
# Argument parsing and dispatch.


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discrepancy",
        description="Exact toolkit for geometric discrepancy problems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gadget = sub.add_parser("gadget", help="compile a graph into an instance file")
    p_gadget.add_argument("--type", required=True, choices=_GADGET_TYPES)
    p_gadget.add_argument("--graph", required=True)
    p_gadget.add_argument("-k", type=int, required=True)
    p_gadget.add_argument("--mu", help="gap parameter p/q for empty-star (default 2)")
    p_gadget.add_argument("--raw", action="store_true", help="skip 1/(n+1) normalization")
    p_gadget.add_argument("-o", "--output", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("instance")
    p_solve.add_argument("--problem", help="must match the instance's problem")
    p_solve.add_argument("--m", type=int, help="half-space blue-weight threshold")
    p_solve.add_argument("--threads", type=int, default=None)
    p_solve.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="graph -> gadget -> solver -> clique oracle")
    p_verify.add_argument("--type", required=True, choices=_GADGET_TYPES)
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("-k", type=int, required=True)
    p_verify.add_argument("--threads", type=int, default=None)

    p_bench = sub.add_parser("bench", help="random-instance scaling rows to CSV")
    p_bench.add_argument("--problem", required=True, choices=_BENCH_PROBLEMS)
    p_bench.add_argument("--dims", required=True, help="comma-separated dimensions")
    p_bench.add_argument("--sizes", required=True, help="comma-separated point counts")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--cutoff", type=int, default=2_000_000)
    p_bench.add_argument("-o", "--output", required=True)
    return parser


def _workers(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("DISCREPANCY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"DISCREPANCY_THREADS must be an integer, got {env!r}")
    return 1


def main(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _dispatch(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "gadget":
        graph = instances.read_graph(args.graph)
        mu = parse_rational(args.mu) if args.mu else None
        inst = _build_gadget(args.type, graph, args.k, mu, args.raw)
        instances.write_instance(args.output, inst)
        print(f"wrote {args.output}: problem={inst.problem} dim={inst.points.dim} "
              f"points={len(inst.points)}")
        return 0

    if args.command == "solve":
        inst = instances.read_instance(args.instance)
        if args.problem and args.problem != inst.problem:
            print(
                f"error: instance is {inst.problem!r}, not {args.problem!r}",
                file=sys.stderr,
            )
            return 2
        value, witness, extra = _solve_instance(inst, _workers(args), args.m)
        if args.json:
            doc = {"problem": inst.problem, "value": value, "witness": _witness_doc(witness)}
            doc.update(extra)
            print(json.dumps(doc, sort_keys=True))
        else:
            print(value)
            print(f"witness: {_witness_text(witness)}")
            for key, val in extra.items():
                print(f"{key}: {val}")
        return 0

    if args.command == "verify":
        graph = instances.read_graph(args.graph)
        return _verify(args.type, graph, args.k, _workers(args), sys.stdout)

    if args.command == "bench":
        dims = [int(x) for x in args.dims.split(",") if x]
        sizes = [int(x) for x in args.sizes.split(",") if x]
        rows = bench_scaling(args.problem, dims, sizes, args.seed, args.cutoff)
        _append_bench_rows(Path(args.output), rows)
        for row in rows:
            print(",".join(str(x) for x in row))
        return 0

    raise ValueError(f"unknown command: {args.command}")


if __name__ == "__main__":
    sys.exit(main())
