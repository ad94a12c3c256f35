"""Exhaustive graph Riemann-Roch sweep over small connected multigraphs.

    python3 scripts/rr_audit_sweep.py --max-vertices 4 --max-edges 5 --coeff 3
    python3 scripts/rr_audit_sweep.py --loops      # shows the loop failures
"""
from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass
from itertools import product

from semistable_rank.families import connected_multigraphs
from semistable_rank.rank import graph_rr_defect


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = 4
    max_edges: int = 5
    coeff: int = 3
    loops: bool = False


def sweep(cfg: SweepConfig) -> Counter:
    tally = Counter()
    for g in connected_multigraphs(cfg.max_vertices, cfg.max_edges, loops=cfg.loops):
        looped = any(g.loops)
        for vec in product(range(-cfg.coeff, cfg.coeff + 1), repeat=g.n):
            tally[(looped, graph_rr_defect(g, g.divisor(vec)) == 0)] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=4)
    ap.add_argument("--max-edges", type=int, default=5)
    ap.add_argument("--coeff", type=int, default=3)
    ap.add_argument("--loops", action="store_true")
    cfg = SweepConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    start = time.perf_counter()
    tally = sweep(cfg)
    for (looped, ok), n in sorted(tally.items()):
        print(f"{'with loops' if looped else 'loopless  '}  {'defect 0' if ok else 'defect!=0'}  {n}")
    print(f"{sum(tally.values())} divisors in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
