"""Command-line front end.

Exit status: 0 success, 1 a hypothesis or audit failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .augmented import (
    AugmentedCurve,
    clifford_certificate,
    enumerate_effective_twists,
    rank_hierarchy,
    r_num,
)
from .chabauty import ChabautyInputs, LocalArithmetic, chabauty_bound
from .errors import ConsistencyError, HypothesisError, InputError
from .families import random_divisor, random_multigraph
from .files import divisor_to_dict, read_divisor, read_graph
from .graph import Multigraph
from .rank import (
    graph_divisor_rank,
    graph_rr_defect,
    is_linearly_equivalent,
    q_reduce,
    rank_witness,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load(args, *divisor_attrs):
    ac = read_graph(args.graph)
    divisors = [read_divisor(getattr(args, a), ac.graph) for a in divisor_attrs]
    return ac, divisors


def _twist_dict(phi, graph: Multigraph) -> dict:
    return {str(v): phi[v] for v in graph.vertices}


def cmd_rank(args) -> int:
    ac, (D,) = _load(args, "divisor")
    r = graph_divisor_rank(ac.graph, D)
    witness = rank_witness(ac.graph, D)
    payload = {"rank": r, "witness": divisor_to_dict(witness, ac.graph) if witness is not None else None}
    _emit(args, payload, str(r))
    return 0


def cmd_reduce(args) -> int:
    ac, (D,) = _load(args, "divisor")
    red = q_reduce(ac.graph, D, args.base)
    payload = {
        "base_vertex": red.base_vertex,
        "divisor": divisor_to_dict(red.divisor, ac.graph),
        "twist": _twist_dict(red.twist, ac.graph),
    }
    _emit(args, payload, str(red.divisor))
    return 0


def cmd_equiv(args) -> int:
    ac, (D1, D2) = _load(args, "divisor1", "divisor2")
    same = is_linearly_equivalent(ac.graph, D1, D2)
    _emit(args, {"equivalent": same}, "true" if same else "false")
    return 0


def cmd_rr_audit(args) -> int:
    import random

    rng = random.Random(args.seed)
    failures = []
    for _ in range(args.count):
        graph = random_multigraph(rng, args.max_vertices, args.max_edges, loops=False)
        D = random_divisor(rng, graph, 3, args.max_abs_degree)
        defect = graph_rr_defect(graph, D)
        if defect:
            failures.append({"edges": [list(e) for e in graph.edges], "divisor": divisor_to_dict(D, graph), "defect": defect})
    payload = {"seed": args.seed, "checked": args.count, "failures": failures}
    _emit(args, payload, f"checked {args.count} divisors (seed {args.seed}): {len(failures)} nonzero defects")
    return 1 if failures else 0


def cmd_clifford(args) -> int:
    ac, (D,) = _load(args, "divisor")
    cert = clifford_certificate(ac, D)
    payload = cert.to_dict(ac.graph)
    text = f"bound {cert.bound} via {cert.branch}; Q = {cert.Q}"
    _emit(args, payload, text)
    return 0


def cmd_rab(args) -> int:
    ac, (D,) = _load(args, "divisor")
    bounds = rank_hierarchy(ac, D)
    payload = {"r_num": r_num(ac, D), "r_ab_pessimistic": bounds.lower, "r_ab_optimistic": bounds.upper}
    _emit(args, payload, f"r_num {payload['r_num']}  r_ab in [{bounds.lower}, {bounds.upper}]")
    return 0


def cmd_twists(args) -> int:
    ac, (D,) = _load(args, "divisor")
    twists = enumerate_effective_twists(ac.graph, D)
    payload = {"twists": [_twist_dict(phi, ac.graph) for phi in twists]}
    lines = [" ".join(f"{v}:{phi[v]}" for v in ac.graph.vertices) for phi in twists]
    _emit(args, payload, "\n".join(lines) if lines else "(none)")
    return 0


def _orders(text: str) -> tuple:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"orders must be comma-separated integers: {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("orders must be non-negative")
    return values


def cmd_chabauty(args) -> int:
    inputs = ChabautyInputs(args.g, args.r, LocalArithmetic(args.p, args.e), args.n_smooth, args.orders)
    report = chabauty_bound(inputs)
    lines = [f"bound {report.bound} ({report.theorem})"]
    lines += [f"  [{'pass' if ok else 'fail'}] {cond}" for cond, ok in report.hypotheses_checked]
    if report.orders_bound is not None:
        lines.append(f"  with given orders: {report.orders_bound}")
    _emit(args, report.to_dict(), "\n".join(lines))
    return 0


def demo_checks() -> list:
    """Replay the two worked examples; returns (name, expected, observed) triples."""
    sharp = chabauty_bound(ChabautyInputs(3, 1, LocalArithmetic(5, 1), 5))
    ac = AugmentedCurve(Multigraph(("P",)), (1,))
    bounds = rank_hierarchy(ac, {"P": 1})
    return [
        ("genus 3 rank 1 curve at p = 5: point bound", (7, "stoll_main"), (sharp.bound, sharp.theorem)),
        ("genus 1 good reduction, D = P: r_num", 1, r_num(ac, {"P": 1})),
        ("genus 1 good reduction, D = P: r_ab pessimistic", 0, bounds.lower),
    ]


def cmd_demo(args) -> int:
    checks = demo_checks()
    ok = all(exp == got for _, exp, got in checks)
    payload = {
        "passed": ok,
        "checks": [{"name": n, "expected": e, "observed": g, "passed": e == g} for n, e, g in checks],
    }
    text = "\n".join(f"[{'PASS' if e == g else 'FAIL'}] {n}: expected {e}, got {g}" for n, e, g in checks)
    _emit(args, payload, text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="semistable-rank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help, divisors=("divisor",)):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("graph")
        for d in divisors:
            p.add_argument(d)
        p.set_defaults(func=func)
        return p

    graph_cmd("rank", cmd_rank, "Baker-Norine rank of a divisor")
    graph_cmd("reduce", cmd_reduce, "q-reduced representative").add_argument("--base", required=True)
    graph_cmd("equiv", cmd_equiv, "linear equivalence test", ("divisor1", "divisor2"))
    graph_cmd("clifford", cmd_clifford, "Clifford certificate for K - D")
    graph_cmd("rab", cmd_rab, "r_ab brackets and r_num")
    graph_cmd("twists", cmd_twists, "twists making D effective")

    p = sub.add_parser("rr-audit", parents=[common], help="graph Riemann-Roch on random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-edges", type=int, default=5)
    p.add_argument("--max-abs-degree", type=int, default=6)
    p.set_defaults(func=cmd_rr_audit)

    p = sub.add_parser("chabauty", parents=[common], help="bound on the number of rational points")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--n-smooth", type=int, required=True)
    p.add_argument("--orders", type=_orders, default=None)
    p.set_defaults(func=cmd_chabauty)

    p = sub.add_parser("demo", parents=[common], help="replay the worked examples")
    p.set_defaults(func=cmd_demo)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HypothesisError, ConsistencyError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
