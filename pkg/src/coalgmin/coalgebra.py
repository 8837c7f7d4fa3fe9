"""Coalgebras, homomorphisms, and the factorization system lifted to them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from . import functors
from .errors import (
    CarrierMismatch,
    InvalidValue,
    NotACongruence,
    NotAHomomorphism,
    SpecMismatch,
)
from .finite import FiniteMap, FiniteSet, Partition, image_factorize
from .functors import FunctorSpec


@dataclass(frozen=True)
class Coalgebra:
    """A finite set of states with a structure map ``states -> F(states)``."""

    spec: FunctorSpec
    states: FiniteSet
    structure: tuple

    def __post_init__(self):
        structure = tuple(self.structure)
        object.__setattr__(self, "structure", structure)
        if len(structure) != self.states.size:
            raise InvalidValue(
                f"{len(structure)} structure entries for {self.states.size} states"
            )
        for x, v in enumerate(structure):
            try:
                functors.check_value(self.spec, v, self.states.size)
            except InvalidValue as exc:
                raise type(exc)(f"state {self.states.label(x)}: {exc}") from None

    @classmethod
    def build(cls, spec: FunctorSpec, structure: Sequence, labels: Optional[Sequence[str]] = None):
        """Construct from loosely typed values (see :func:`functors.make_value`)."""
        values = tuple(functors.make_value(spec, raw) for raw in structure)
        states = FiniteSet(len(values), tuple(labels) if labels is not None else None)
        return cls(spec, states, values)

    @property
    def size(self) -> int:
        return self.states.size

    def successors(self, x: int) -> list[int]:
        return functors.successors(self.spec, self.structure[x])

    def pointed(self, point: int) -> "PointedCoalgebra":
        return PointedCoalgebra(self, point)


@dataclass(frozen=True)
class PointedCoalgebra:
    """A coalgebra with a designated initial state."""

    base: Coalgebra
    point: int

    def __post_init__(self):
        if not 0 <= self.point < self.base.size:
            raise InvalidValue(f"point {self.point} outside carrier of size {self.base.size}")

    @classmethod
    def build(cls, spec, structure, point: int = 0, labels=None) -> "PointedCoalgebra":
        return cls(Coalgebra.build(spec, structure, labels), point)

    @property
    def spec(self) -> FunctorSpec:
        return self.base.spec

    @property
    def states(self) -> FiniteSet:
        return self.base.states

    @property
    def structure(self) -> tuple:
        return self.base.structure

    @property
    def size(self) -> int:
        return self.base.size

    def successors(self, x: int) -> list[int]:
        return self.base.successors(x)


AnyCoalgebra = Union[Coalgebra, PointedCoalgebra]


def _base(c: AnyCoalgebra) -> Coalgebra:
    return c.base if isinstance(c, PointedCoalgebra) else c


def _check_compatible(h: FiniteMap, src: AnyCoalgebra, tgt: AnyCoalgebra) -> None:
    if src.spec != tgt.spec:
        raise SpecMismatch(f"{src.spec} vs {tgt.spec}")
    if h.domain.size != src.size or h.codomain.size != tgt.size:
        raise CarrierMismatch(
            f"map {h.domain.size}->{h.codomain.size} between coalgebras of size {src.size} and {tgt.size}"
        )


def is_homomorphism(h: FiniteMap, src: AnyCoalgebra, tgt: AnyCoalgebra) -> bool:
    """True iff ``tgt.structure[h(x)] = F(h)(src.structure[x])`` for every ``x``."""
    _check_compatible(h, src, tgt)
    spec = src.spec
    t = h.table
    return all(
        tgt.structure[t[x]] == functors.push(spec, v, t) for x, v in enumerate(src.structure)
    )


def is_pointed_homomorphism(h: FiniteMap, src: PointedCoalgebra, tgt: PointedCoalgebra) -> bool:
    _check_compatible(h, src, tgt)
    return h(src.point) == tgt.point and is_homomorphism(h, src, tgt)


@dataclass(frozen=True)
class Homomorphism:
    """A map between carriers; ``verified`` is computed, never supplied.

    If both ends are pointed the point condition is part of the check.
    """

    map: FiniteMap
    source: AnyCoalgebra
    target: AnyCoalgebra
    verified: bool = field(init=False)

    def __post_init__(self):
        if isinstance(self.source, PointedCoalgebra) and isinstance(self.target, PointedCoalgebra):
            ok = is_pointed_homomorphism(self.map, self.source, self.target)
        else:
            ok = is_homomorphism(self.map, self.source, self.target)
        object.__setattr__(self, "verified", ok)

    def is_injective(self) -> bool:
        return self.map.is_injective()

    def is_surjective(self) -> bool:
        return self.map.is_surjective()

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """Composite ``other . self``."""
        return Homomorphism(other.map @ self.map, self.source, other.target)


def factorize_homomorphism(h: Homomorphism) -> tuple[Homomorphism, Homomorphism, Coalgebra]:
    """Factor a homomorphism through the coalgebra on its image.

    The image carries the unique structure making both the surjective and
    the injective part homomorphisms: for an image element ``j`` take any
    preimage ``a`` and push ``c(a)`` along the surjection.  All preimages
    must agree, and the result must land on ``d(m(j))`` under ``F(m)``.
    """
    if not h.verified:
        raise NotAHomomorphism("cannot factorize an unverified map")
    src, tgt = _base(h.source), _base(h.target)
    e, m, image = image_factorize(h.map)
    spec = src.spec
    mid_structure: list = [None] * image.size
    for a, j in enumerate(e.table):
        v = functors.push(spec, src.structure[a], e.table)
        if mid_structure[j] is None:
            mid_structure[j] = v
        elif mid_structure[j] != v:
            raise NotAHomomorphism(f"fill-in not well defined at image element {j}")
    for j, w in enumerate(mid_structure):
        if functors.push(spec, w, m.table) != tgt.structure[m(j)]:
            raise NotAHomomorphism(f"fill-in does not commute at image element {j}")
    mid = Coalgebra(spec, image, tuple(mid_structure))
    quot = Homomorphism(e, h.source, _repoint(mid, h.source, e))
    sub = Homomorphism(m, quot.target, h.target)
    return quot, sub, mid


def _repoint(mid: Coalgebra, src: AnyCoalgebra, e: FiniteMap) -> AnyCoalgebra:
    if isinstance(src, PointedCoalgebra):
        return PointedCoalgebra(mid, e(src.point))
    return mid


def restrict(c: AnyCoalgebra, members: Sequence[int]) -> tuple[AnyCoalgebra, FiniteMap]:
    """The subcoalgebra on ``members`` (kept in the given order) and its inclusion.

    ``members`` must be closed under successors; for a pointed coalgebra it
    must contain the point.
    """
    base = _base(c)
    renumber = {x: i for i, x in enumerate(members)}
    if len(renumber) != len(members):
        raise InvalidValue("duplicate members")
    table = [-1] * base.size
    for x, i in renumber.items():
        table[x] = i
    structure = []
    for x in members:
        succ = base.successors(x)
        if any(table[y] < 0 for y in succ):
            raise InvalidValue(f"subset not closed under successors of state {x}")
        structure.append(functors.push(base.spec, base.structure[x], table))
    sub = Coalgebra(base.spec, base.states.subset(members), tuple(structure))
    incl = FiniteMap(sub.states, base.states, tuple(members))
    if isinstance(c, PointedCoalgebra):
        if c.point not in renumber:
            raise InvalidValue("subset does not contain the point")
        return PointedCoalgebra(sub, renumber[c.point]), incl
    return sub, incl


def is_congruence(c: AnyCoalgebra, p: Partition) -> bool:
    """Whether the quotient map of ``p`` admits a coalgebra structure."""
    base = _base(c)
    sig: dict[int, object] = {}
    for x, v in enumerate(base.structure):
        w = functors.push(base.spec, v, p.block_of)
        b = p.block_of[x]
        if sig.setdefault(b, w) != w:
            return False
    return True


def quotient_by(c: AnyCoalgebra, p: Partition) -> tuple[AnyCoalgebra, FiniteMap]:
    """The quotient coalgebra by a congruence, and the projection.

    Raises :class:`NotACongruence` if two members of a block have different
    images under ``F(q)``.
    """
    base = _base(c)
    q = p.quotient_map()
    structure: list = [None] * p.block_count
    for x, v in enumerate(base.structure):
        w = functors.push(base.spec, v, q.table)
        b = q(x)
        if structure[b] is None:
            structure[b] = w
        elif structure[b] != w:
            raise NotACongruence(f"block {b} is not respected at state {base.states.label(x)}")
    quot = Coalgebra(base.spec, q.codomain, tuple(structure))
    if isinstance(c, PointedCoalgebra):
        return PointedCoalgebra(quot, q(c.point)), q
    return quot, q


def coproduct(a: Coalgebra, b: Coalgebra) -> tuple[Coalgebra, FiniteMap, FiniteMap]:
    """Disjoint union with ``a``'s states first; returns the two injections."""
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    n, k = a.size, b.size
    shift = [n + y for y in range(k)]
    structure = a.structure + tuple(functors.push(b.spec, v, shift) for v in b.structure)
    both = Coalgebra(a.spec, FiniteSet(n + k), structure)
    inl = FiniteMap(a.states, both.states, tuple(range(n)))
    inr = FiniteMap(b.states, both.states, tuple(shift))
    return both, inl, inr


def iter_homomorphisms(
    src: AnyCoalgebra,
    tgt: AnyCoalgebra,
    *,
    pointed: bool = True,
    injective: bool = False,
    candidates: Optional[Sequence[Sequence[int]]] = None,
) -> Iterator[FiniteMap]:
    """All homomorphisms ``src -> tgt`` in lexicographic table order.

    Backtracking over states in index order with ascending candidate
    targets; the homomorphism condition at ``x`` is checked as soon as ``x``
    and all its successors are assigned.  For functors that cannot cancel
    weights, ``h(y)`` must already lie in the support of ``tgt(h(x))`` for
    every assigned successor ``y`` of ``x``, which prunes early.
    """
    if src.spec != tgt.spec:
        raise SpecMismatch(f"{src.spec} vs {tgt.spec}")
    spec = src.spec
    n, k = src.size, tgt.size
    if candidates is None:
        candidates = [range(k)] * n
    candidates = [list(cs) for cs in candidates]
    if pointed:
        p = src.point
        candidates[p] = [t for t in candidates[p] if t == tgt.point]

    succ = [src.successors(x) for x in range(n)]
    tgt_support = [functors.support(spec, v) for v in tgt.structure]
    # checks[i]: states whose full condition becomes decidable once state i is set
    ready_at: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        ready_at[max([x, *succ[x]])].append(x)
    preds: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        for y in succ[x]:
            preds[y].append(x)
    exact_support = not spec.cancellative

    table = [-1] * n
    used = set()

    def consistent(i: int) -> bool:
        t = table[i]
        if exact_support:
            for y in succ[i]:
                if y < i and table[y] not in tgt_support[t]:
                    return False
            for x in preds[i]:
                if x < i and t not in tgt_support[table[x]]:
                    return False
        for x in ready_at[i]:
            if tgt.structure[table[x]] != functors.push(spec, src.structure[x], table):
                return False
        return True

    def search(i: int) -> Iterator[FiniteMap]:
        if i == n:
            yield FiniteMap(src.states, tgt.states, tuple(table))
            return
        for t in candidates[i]:
            if injective and t in used:
                continue
            table[i] = t
            if consistent(i):
                used.add(t)
                yield from search(i + 1)
                used.discard(t)
        table[i] = -1

    if n == 0 or all(candidates):
        yield from search(0)


def find_pointed_homomorphism(src: PointedCoalgebra, tgt: PointedCoalgebra) -> Optional[FiniteMap]:
    """The lexicographically least pointed homomorphism, or ``None``."""
    return next(iter_homomorphisms(src, tgt, pointed=True), None)


def are_isomorphic_pointed(a: PointedCoalgebra, b: PointedCoalgebra) -> bool:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    if a.size != b.size:
        return False
    # cheap invariant: multiset of support sizes
    if sorted(len(a.successors(x)) for x in range(a.size)) != sorted(
        len(b.successors(x)) for x in range(b.size)
    ):
        return False
    return next(iter_homomorphisms(a, b, pointed=True, injective=True), None) is not None
