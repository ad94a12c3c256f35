"""Survey pessimistic r_ab(K) against g - 1 and certificate slack on random curves.

Nothing is asserted: r_ab(K) < g - 1 is the expected pattern once some
component has positive genus, and the table shows how often it happens.
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from semistable_rank.augmented import PESSIMISTIC, canonical_multidegree, clifford_certificate, r_ab
from semistable_rank.families import random_augmented_instances


@dataclass(frozen=True)
class SurveyConfig:
    seed: int = 0
    count: int = 200
    max_vertices: int = 4
    max_edges: int = 5
    max_genus: int = 2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SurveyConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SurveyConfig(**vars(ap.parse_args()))

    gap = Counter()
    slack = Counter()
    seen = set()
    for ac, _ in random_augmented_instances(
        cfg.seed, cfg.count, cfg.max_vertices, cfg.max_edges, cfg.max_genus
    ):
        if ac in seen:
            continue
        seen.add(ac)
        g = ac.total_genus
        K = canonical_multidegree(ac)
        gap[(ac.totally_degenerate, g - 1 - r_ab(ac, K, PESSIMISTIC))] += 1
        cert = clifford_certificate(ac, {})
        slack[g - 1 - cert.bound] += 1

    print(f"{len(seen)} distinct curves")
    print("totally degenerate | g - 1 - r_ab(K) | curves")
    for (deg, d), n in sorted(gap.items()):
        print(f"{str(deg):>18} | {d:>16} | {n}")
    print("certificate slack at D = 0 (g - 1 - bound):", dict(sorted(slack.items())))


if __name__ == "__main__":
    main()
