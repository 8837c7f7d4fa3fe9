#!/usr/bin/env python3
"""How often do the two minimization orders disagree?

For each functor, draws random pointed coalgebras and compares
"simple quotient then reachable part" with the reverse order.  The
set-like functors should never disagree; the int and rational weighted
functors do once weights cancel.

    python3 scripts/order_interplay.py --instances 2000 --max-states 6
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field

from coalgmin.oracles import STANDARD_SPECS, random_coalgebra
from coalgmin.pipeline import Order, is_well_pointed, orders_agree, well_pointed_minimize


@dataclass
class Config:
    instances: int = 1000
    max_states: int = 6
    density: float = 0.4
    reachable: bool = False
    seed: int = 0
    kinds: list[str] = field(default_factory=lambda: sorted(STANDARD_SPECS))


def run(cfg: Config) -> dict[str, dict]:
    rows = {}
    for kind in cfg.kinds:
        spec = STANDARD_SPECS[kind]
        rng = random.Random(f"{cfg.seed}|{kind}")
        disagree, not_well_pointed, first_seed = 0, 0, None
        start = time.perf_counter()
        for i in range(cfg.instances):
            seed = cfg.seed * 1_000_003 + i
            c = random_coalgebra(spec, rng.randint(1, cfg.max_states), seed, cfg.density, cfg.reachable)
            if not orders_agree(c):
                disagree += 1
                first_seed = seed if first_seed is None else first_seed
            if not is_well_pointed(well_pointed_minimize(c, Order.REACH_FIRST)):
                not_well_pointed += 1
        rows[kind] = {
            "disagree": disagree,
            "reach_first_not_well_pointed": not_well_pointed,
            "first_disagreeing_seed": first_seed,
            "seconds": time.perf_counter() - start,
        }
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=Config.instances)
    p.add_argument("--max-states", type=int, default=Config.max_states)
    p.add_argument("--density", type=float, default=Config.density)
    p.add_argument("--reachable", action="store_true")
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--kinds", nargs="+", choices=sorted(STANDARD_SPECS), default=sorted(STANDARD_SPECS))
    a = p.parse_args()
    cfg = Config(a.instances, a.max_states, a.density, a.reachable, a.seed, a.kinds)
    print(f"{'functor':<10} {'disagree':>9} {'rate':>7} {'not wp':>7} {'first seed':>11} {'time':>7}")
    for kind, r in run(cfg).items():
        rate = r["disagree"] / cfg.instances
        first = "-" if r["first_disagreeing_seed"] is None else str(r["first_disagreeing_seed"])
        print(
            f"{kind:<10} {r['disagree']:>9} {rate:>7.2%} {r['reach_first_not_well_pointed']:>7}"
            f" {first:>11} {r['seconds']:>6.2f}s"
        )


if __name__ == "__main__":
    main()
