"""Reachable subcoalgebras of pointed coalgebras."""
from __future__ import annotations

from collections import deque

from .coalgebra import Homomorphism, PointedCoalgebra, restrict
from .errors import TooLarge

ORACLE_MAX_STATES = 12


def reachable_states(c: PointedCoalgebra) -> list[int]:
    """States reachable from the point, in breadth-first discovery order."""
    seen = {c.point}
    order = [c.point]
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for y in c.successors(x):
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def reachable_part(c: PointedCoalgebra) -> tuple[PointedCoalgebra, Homomorphism]:
    """The least pointed subcoalgebra, numbered in BFS discovery order.

    Returns the subcoalgebra and its (injective, pointed) inclusion.
    """
    sub, incl = restrict(c, reachable_states(c))
    return sub, Homomorphism(incl, sub, c)


def is_reachable(c: PointedCoalgebra) -> bool:
    return len(reachable_states(c)) == c.size


def reachable_part_oracle(c: PointedCoalgebra) -> frozenset[int]:
    """Intersection of all successor-closed state sets that contain the point.

    Enumerates all ``2**(n-1)`` candidate subsets; refuses ``n > 12``.
    """
    n = c.size
    if n > ORACLE_MAX_STATES:
        raise TooLarge(f"{n} states exceeds the oracle bound of {ORACLE_MAX_STATES}")
    succ_mask = [sum(1 << y for y in c.successors(x)) for x in range(n)]
    point_bit = 1 << c.point
    result = (1 << n) - 1
    for mask in range(1 << n):
        if not mask & point_bit:
            continue
        closed = all(
            succ_mask[x] & ~mask == 0 for x in range(n) if mask >> x & 1
        )
        if closed:
            result &= mask
    return frozenset(x for x in range(n) if result >> x & 1)
