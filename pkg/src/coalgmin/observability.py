"""Behavioural equivalence and simple quotients.

Behavioural equivalence is computed by iterating the final chain on
partitions: starting from one block, two states stay together iff their
successor structures become equal after collapsing every block of the
previous round.  The loop recomputes all signatures each round (no
splitter queues), so it is quadratic but works unchanged for every
functor in :mod:`coalgmin.functors`.
"""
from __future__ import annotations

from typing import Iterator, Optional

from . import functors
from .coalgebra import (
    AnyCoalgebra,
    Homomorphism,
    _base,
    is_congruence,
    quotient_by,
)
from .errors import TooLarge, WrongFunctor
from .finite import Partition, join_partitions

ORACLE_MAX_STATES = 6


def refinement_chain(c: AnyCoalgebra, initial: Optional[Partition] = None) -> list[Partition]:
    """The sequence of partitions up to and including the first fixpoint.

    With an ``initial`` partition the result is the coarsest congruence
    refining it; the default (one block) gives behavioural equivalence.
    """
    base = _base(c)
    p = initial if initial is not None else Partition.indiscrete(base.states)
    chain = [p]
    spec = base.spec
    while True:
        keys = [
            (b, functors.push(spec, v, p.block_of)) for b, v in zip(p.block_of, base.structure)
        ]
        nxt = Partition.from_keys(base.states, keys)
        if nxt.block_count == p.block_count:
            break
        p = nxt
        chain.append(p)
    return chain


def behavioural_equivalence(c: AnyCoalgebra, initial: Optional[Partition] = None) -> Partition:
    p = refinement_chain(c, initial)[-1]
    if not is_congruence(c, p):
        raise AssertionError("refinement fixpoint is not a congruence")
    return p


def simple_quotient(c: AnyCoalgebra) -> tuple[AnyCoalgebra, Homomorphism]:
    """Quotient by behavioural equivalence; blocks numbered by least member.

    For a pointed input the quotient is pointed at the block of the point.
    """
    p = behavioural_equivalence(c)
    q, proj = quotient_by(c, p)
    hom = Homomorphism(proj, c, q)
    if not hom.verified:
        raise AssertionError("projection onto the simple quotient is not a homomorphism")
    return q, hom


def is_simple(c: AnyCoalgebra) -> bool:
    return behavioural_equivalence(c).is_discrete()


def behaviourally_equivalent(c: AnyCoalgebra, x: int, y: int) -> bool:
    p = behavioural_equivalence(c)
    return p.block_of[x] == p.block_of[y]


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of ``{0..n-1}`` as restricted growth strings."""
    if n == 0:
        yield ()
        return

    def grow(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from grow(prefix, max(top, b))
            prefix.pop()

    yield from grow([0], 0)


def congruences(c: AnyCoalgebra) -> list[Partition]:
    base = _base(c)
    return [
        p
        for p in (Partition(base.states, rgs) for rgs in set_partitions(base.size))
        if is_congruence(base, p)
    ]


def congruence_oracle(c: AnyCoalgebra) -> Partition:
    """Join of all congruences, found by enumerating every partition."""
    base = _base(c)
    if base.size > ORACLE_MAX_STATES:
        raise TooLarge(f"{base.size} states exceeds the oracle bound of {ORACLE_MAX_STATES}")
    joined = join_partitions(congruences(base), base.states)
    if not is_congruence(base, joined):
        raise AssertionError("join of congruences is not a congruence")
    return joined


def dfa_minimize_reference(c: AnyCoalgebra) -> Partition:
    """Moore's algorithm: split on acceptance, refine on successor blocks."""
    base = _base(c)
    if base.spec.kind != "dfa":
        raise WrongFunctor(f"Moore minimization needs a dfa, got {base.spec}")
    cells = base.structure
    block = [int(cell.accept) for cell in cells]
    count = len(set(block))
    while True:
        sigs = [(block[x],) + tuple(block[y] for y in cells[x].next) for x in range(len(cells))]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_block = [ids[s] for s in sigs]
        if len(ids) == count:
            break
        block, count = new_block, len(ids)
    return Partition.from_keys(base.states, block)
