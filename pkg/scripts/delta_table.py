"""Print delta(n) for one (p, e) and audit the vanishing and linear bounds on a grid."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from semistable_rank.chabauty import LocalArithmetic, delta_property_audit, is_prime


@dataclass(frozen=True)
class TableConfig:
    p: int = 3
    e: int = 1
    n_max: int = 40
    grid_p: int = 50
    grid_e: int = 5
    grid_n: int = 200


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(TableConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = TableConfig(**vars(ap.parse_args()))

    audit = delta_property_audit(LocalArithmetic(cfg.p, cfg.e), cfg.n_max)
    nonzero = {n: d for n, d in audit.table.items() if d}
    print(f"p={cfg.p} e={cfg.e}: nonzero delta(n) for n <= {cfg.n_max}: {nonzero or 'none'}")

    failing = []
    for p in (q for q in range(2, cfg.grid_p + 1) if is_prime(q)):
        for e in range(1, cfg.grid_e + 1):
            a = delta_property_audit(LocalArithmetic(p, e), cfg.grid_n)
            if not a.passed:
                failing.append((p, e, a.failures[0]))
    print(f"grid p<={cfg.grid_p}, e<={cfg.grid_e}, n<={cfg.grid_n}: {len(failing)} failing (p, e)")
    for row in failing:
        print("  ", row)


if __name__ == "__main__":
    main()
