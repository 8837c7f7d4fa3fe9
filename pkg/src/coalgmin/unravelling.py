"""Tree unravelling of pointed bag coalgebras.

Among reachable pointed coalgebras with all morphisms as the "quotient"
class and isomorphisms as the "subobject" class, a minimal object must be a
tree, and for the bag functor ``F X = (N,+,0)^(X)`` the tree unravelling is
that minimization.  It is unique up to isomorphism but not up to unique
isomorphism: permuting siblings that unravel the same state gives a
nontrivial automorphism over the projection.  ``count_automorphisms_over``
counts these.

Loops unravel to infinite trees, so construction is cut off at a depth;
a truncated tree has its frontier nodes set to the zero weight function
and carries no homomorphism claim.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial

from .coalgebra import Homomorphism, PointedCoalgebra, iter_homomorphisms
from .errors import Incomplete, TooLarge, WrongFunctor
from .finite import FiniteMap
from .functors import Weights
from .reachability import is_reachable, reachable_part

MAX_NODES = 100_000


@dataclass(frozen=True)
class UnravelResult:
    tree: PointedCoalgebra
    onto: Homomorphism
    complete: bool
    depth_used: int


def _require_bag(c: PointedCoalgebra) -> None:
    if not c.spec.is_bag:
        raise WrongFunctor(f"tree unravelling is only provided for the bag functor, got {c.spec}")


def unravel(c: PointedCoalgebra, max_depth: int, max_nodes: int = MAX_NODES) -> UnravelResult:
    """Breadth-first path unravelling of the reachable part of ``c``.

    A node over state ``x`` with ``c(x)(y) = k`` gets ``k`` children over
    ``y``; children are grouped by ``y`` in index order.  Nodes at depth
    ``max_depth`` are not expanded.
    """
    _require_bag(c)
    if max_depth < 0:
        raise ValueError("max_depth must be non-negative")
    reach, _ = reachable_part(c)

    under = [reach.point]  # node -> state of `reach`
    depth = [0]
    children: list[list[int]] = []
    complete = True
    queue = deque([0])
    while queue:
        node = queue.popleft()
        kids: list[int] = []
        weights = reach.structure[under[node]]
        if weights and depth[node] >= max_depth:
            complete = False
        elif weights:
            for y, k in weights.items():
                for _ in range(int(k)):
                    kid = len(under)
                    if kid >= max_nodes:
                        raise TooLarge(f"unravelling exceeds {max_nodes} nodes")
                    under.append(y)
                    depth.append(depth[node] + 1)
                    kids.append(kid)
                    queue.append(kid)
        children.append(kids)

    tree = PointedCoalgebra.build(
        c.spec, [Weights((k, 1) for k in kids) for kids in children], point=0
    )
    onto = Homomorphism(FiniteMap(tree.states, reach.states, tuple(under)), tree, reach)
    return UnravelResult(tree=tree, onto=onto, complete=complete, depth_used=max(depth))


def in_weights(c: PointedCoalgebra) -> list:
    acc = [0] * c.size
    for v in c.structure:
        for y, w in v.items():
            acc[y] += w
    return acc


def _acyclic(c: PointedCoalgebra) -> bool:
    indeg = [0] * c.size
    for x in range(c.size):
        for y in c.successors(x):
            indeg[y] += 1
    ready = [x for x in range(c.size) if indeg[x] == 0]
    seen = 0
    while ready:
        x = ready.pop()
        seen += 1
        for y in c.successors(x):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return seen == c.size


def is_tree(c: PointedCoalgebra) -> bool:
    """Reachable, acyclic, point has in-weight 0 and every other state 1."""
    _require_bag(c)
    if not is_reachable(c):
        return False
    weights = in_weights(c)
    if any(w != (0 if x == c.point else 1) for x, w in enumerate(weights)):
        return False
    return _acyclic(c)


def count_automorphisms_over(r: UnravelResult) -> int:
    """Number of pointed automorphisms ``phi`` of the tree with ``onto . phi = onto``."""
    if not r.complete:
        raise Incomplete("automorphisms are only counted for complete unravellings")
    onto = r.onto.map.table
    fibre: dict[int, list[int]] = {}
    for node, x in enumerate(onto):
        fibre.setdefault(x, []).append(node)
    candidates = [fibre[onto[node]] for node in range(r.tree.size)]
    return sum(
        1 for _ in iter_homomorphisms(r.tree, r.tree, pointed=True, injective=True, candidates=candidates)
    )


def sibling_symmetry_count(r: UnravelResult) -> int:
    """Closed form for :func:`count_automorphisms_over` on unravelled trees.

    Product over tree nodes of ``k!`` for each multiplicity ``k`` with which
    the underlying state reaches a successor.
    """
    reach = r.onto.target
    total = 1
    for node in range(r.tree.size):
        if r.tree.structure[node]:
            for k in reach.structure[r.onto.map(node)].values():
                total *= factorial(int(k))
    return total
