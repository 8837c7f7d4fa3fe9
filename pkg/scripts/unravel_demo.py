#!/usr/bin/env python3
"""Tree unravellings of small bag coalgebras.

Prints, per depth, the tree size, whether the unravelling is complete and
(for complete trees) how many automorphisms commute with the projection,
next to the closed form (product of factorials of edge multiplicities).
"""
from __future__ import annotations

import argparse

from coalgmin import FunctorSpec, PointedCoalgebra
from coalgmin.unravelling import count_automorphisms_over, sibling_symmetry_count, unravel

EXAMPLES = {
    "double edge": PointedCoalgebra.build(FunctorSpec.bag(), [{1: 2}, {}], labels=["p", "q"]),
    "loop": PointedCoalgebra.build(FunctorSpec.bag(), [{0: 1}], labels=["p"]),
    "diamond": PointedCoalgebra.build(FunctorSpec.bag(), [{1: 1, 2: 2}, {3: 1}, {3: 3}, {}]),
    "triple fan": PointedCoalgebra.build(FunctorSpec.bag(), [{1: 3}, {2: 2}, {}]),
}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-depth", type=int, default=5)
    a = p.parse_args()
    for name, c in EXAMPLES.items():
        print(name)
        for depth in range(a.max_depth + 1):
            r = unravel(c, depth)
            line = f"  depth {depth}: {r.tree.size:>4} nodes, complete={r.complete}"
            if r.complete:
                line += f", automorphisms={count_automorphisms_over(r)} (closed form {sibling_symmetry_count(r)})"
            print(line)
            if r.complete:
                break


if __name__ == "__main__":
    main()
