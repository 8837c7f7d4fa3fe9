"""Finite sets, total maps between them, and the (surjective, injective)
factorization system on finite sets.

Subobjects are handled as injections whose image is a sorted index subset;
quotients as :class:`Partition` with blocks numbered by their least member.
Both conventions make "unique up to isomorphism" checkable by plain equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidValue,
    MixedCarriers,
    MixedCodomains,
    NotInjective,
    NotSurjective,
    SquareDoesNotCommute,
)


@dataclass(frozen=True)
class FiniteSet:
    """The set ``{0, ..., size-1}``, optionally with display labels."""

    size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0:
            raise InvalidValue(f"negative set size {self.size}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise InvalidValue(f"{len(labels)} labels for a set of size {self.size}")
            if len(set(labels)) != len(labels):
                raise InvalidValue("labels are not pairwise distinct")

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def subset(self, indices: Sequence[int]) -> "FiniteSet":
        """A new set with one element per index, carrying over labels."""
        if self.labels is None:
            return FiniteSet(len(indices))
        return FiniteSet(len(indices), tuple(self.labels[i] for i in indices))


@dataclass(frozen=True)
class FiniteMap:
    """A total function ``domain -> codomain`` stored as a lookup table."""

    domain: FiniteSet
    codomain: FiniteSet
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.domain.size:
            raise InvalidValue(
                f"table has {len(table)} entries, domain has {self.domain.size}"
            )
        for x, y in enumerate(table):
            if not 0 <= y < self.codomain.size:
                raise InvalidValue(f"table[{x}] = {y} outside codomain of size {self.codomain.size}")

    @classmethod
    def identity(cls, s: FiniteSet) -> "FiniteMap":
        return cls(s, s, tuple(range(s.size)))

    @classmethod
    def from_table(cls, table: Sequence[int], codomain_size: int) -> "FiniteMap":
        return cls(FiniteSet(len(table)), FiniteSet(codomain_size), tuple(table))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __matmul__(self, other: "FiniteMap") -> "FiniteMap":
        """``g @ f`` is the composite ``g . f`` (apply f first)."""
        if other.codomain.size != self.domain.size:
            raise CarrierSizeError(other.codomain.size, self.domain.size)
        return FiniteMap(other.domain, self.codomain, tuple(self.table[y] for y in other.table))

    def image(self) -> list[int]:
        """Sorted list of values hit by the map."""
        return sorted(set(self.table))

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.codomain.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def kernel(self) -> "Partition":
        """The partition of the domain into fibres of the map."""
        return Partition.from_keys(self.domain, self.table)


class CarrierSizeError(InvalidValue):
    def __init__(self, left: int, right: int):
        super().__init__(f"cannot compose: codomain size {left} != domain size {right}")


def _canonical_numbering(keys: Sequence) -> tuple[list[int], int]:
    ids: dict = {}
    out = []
    for k in keys:
        if k not in ids:
            ids[k] = len(ids)
        out.append(ids[k])
    return out, len(ids)


@dataclass(frozen=True)
class Partition:
    """A partition of ``carrier`` into non-empty blocks.

    Block ids are renumbered on construction so that blocks appear in order
    of their least member; two partitions are equal iff they have the same
    blocks (carrier labels are ignored).
    """

    carrier: FiniteSet = field(compare=False)
    block_of: tuple[int, ...]
    block_count: int = field(default=-1)

    def __post_init__(self):
        block_of = tuple(self.block_of)
        if len(block_of) != self.carrier.size:
            raise InvalidValue(
                f"block_of has {len(block_of)} entries for a carrier of size {self.carrier.size}"
            )
        if self.block_count >= 0:
            used = set(block_of)
            if used != set(range(self.block_count)):
                raise InvalidValue("block ids are not a contiguous range of non-empty blocks")
        canon, count = _canonical_numbering(block_of)
        object.__setattr__(self, "block_of", tuple(canon))
        object.__setattr__(self, "block_count", count)

    @classmethod
    def from_keys(cls, carrier: FiniteSet | int, keys: Sequence) -> "Partition":
        """States with equal (hashable) keys share a block."""
        if isinstance(carrier, int):
            carrier = FiniteSet(carrier)
        canon, _ = _canonical_numbering(keys)
        return cls(carrier, tuple(canon))

    @classmethod
    def from_blocks(cls, carrier: FiniteSet | int, blocks: Iterable[Iterable[int]]) -> "Partition":
        if isinstance(carrier, int):
            carrier = FiniteSet(carrier)
        block_of = [-1] * carrier.size
        for b, block in enumerate(blocks):
            for x in block:
                if block_of[x] != -1:
                    raise InvalidValue(f"element {x} occurs in two blocks")
                block_of[x] = b
        if -1 in block_of:
            raise InvalidValue(f"element {block_of.index(-1)} is in no block")
        return cls(carrier, tuple(block_of))

    @classmethod
    def discrete(cls, carrier: FiniteSet | int) -> "Partition":
        if isinstance(carrier, int):
            carrier = FiniteSet(carrier)
        return cls(carrier, tuple(range(carrier.size)))

    @classmethod
    def indiscrete(cls, carrier: FiniteSet | int) -> "Partition":
        if isinstance(carrier, int):
            carrier = FiniteSet(carrier)
        return cls(carrier, (0,) * carrier.size)

    def __len__(self):
        return self.block_count

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return out

    def representatives(self) -> list[int]:
        """Least member of each block, indexed by block id."""
        return [block[0] for block in self.blocks()]

    def quotient_map(self) -> FiniteMap:
        return FiniteMap(self.carrier, FiniteSet(self.block_count), self.block_of)

    def is_discrete(self) -> bool:
        return self.block_count == self.carrier.size

    def refines(self, other: "Partition") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        if other.carrier.size != self.carrier.size:
            raise MixedCarriers("partitions live on different carriers")
        seen: dict[int, int] = {}
        for mine, theirs in zip(self.block_of, other.block_of):
            if seen.setdefault(mine, theirs) != theirs:
                return False
        return True

    def meet(self, other: "Partition") -> "Partition":
        return Partition.from_keys(self.carrier, list(zip(self.block_of, other.block_of)))


def image_factorize(f: FiniteMap) -> tuple[FiniteMap, FiniteMap, FiniteSet]:
    """Split ``f`` into a surjection ``e`` onto its image and an injection ``m``.

    Image elements are ordered by first occurrence in ``f.table``.
    """
    pos: dict[int, int] = {}
    e_table = []
    for y in f.table:
        if y not in pos:
            pos[y] = len(pos)
        e_table.append(pos[y])
    m_table = tuple(pos)  # insertion order = first occurrence
    image = f.codomain.subset(m_table)
    e = FiniteMap(f.domain, image, tuple(e_table))
    m = FiniteMap(image, f.codomain, m_table)
    return e, m, image


def diagonal_fill_in(e: FiniteMap, f: FiniteMap, g: FiniteMap, m: FiniteMap) -> FiniteMap:
    """The unique ``d: B -> C`` with ``d . e = f`` and ``m . d = g``.

    The square is ``e: A ->> B``, ``f: A -> C``, ``g: B -> D``, ``m: C >-> D``.
    """
    if not e.is_surjective():
        raise NotSurjective("left edge of the square is not surjective")
    if not m.is_injective():
        raise NotInjective("right edge of the square is not injective")
    if e.domain.size != f.domain.size or g.domain.size != e.codomain.size:
        raise SquareDoesNotCommute("square edges do not line up")
    if m.domain.size != f.codomain.size or g.codomain.size != m.codomain.size:
        raise SquareDoesNotCommute("square edges do not line up")
    if (g @ e).table != (m @ f).table:
        raise SquareDoesNotCommute("g . e != m . f")
    d = [0] * e.codomain.size
    for a, b in enumerate(e.table):
        d[b] = f.table[a]
    return FiniteMap(e.codomain, f.codomain, tuple(d))


def intersect_injections(subs: Sequence[FiniteMap], codomain: FiniteSet | None = None) -> FiniteMap:
    """Intersection of subobjects given as injections into a common set.

    The result is the inclusion of the sorted common image.  An empty list
    yields the identity on ``codomain``.
    """
    if not subs:
        if codomain is None:
            raise InvalidValue("empty intersection needs an explicit codomain")
        return FiniteMap.identity(codomain)
    target = subs[0].codomain if codomain is None else codomain
    common = set(range(target.size))
    for m in subs:
        if m.codomain.size != target.size:
            raise MixedCodomains("injections have different codomains")
        if not m.is_injective():
            raise NotInjective("intersect_injections expects injections")
        common &= set(m.table)
    members = sorted(common)
    return FiniteMap(target.subset(members), target, tuple(members))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def join_partitions(quots: Sequence[Partition], carrier: FiniteSet | int | None = None) -> Partition:
    """Finest partition coarser than all of ``quots`` (discrete if empty)."""
    if isinstance(carrier, int):
        carrier = FiniteSet(carrier)
    if not quots:
        if carrier is None:
            raise InvalidValue("empty join needs an explicit carrier")
        return Partition.discrete(carrier)
    carrier = quots[0].carrier if carrier is None else carrier
    uf = _UnionFind(carrier.size)
    for p in quots:
        if p.carrier.size != carrier.size:
            raise MixedCarriers("partitions live on different carriers")
        for block in p.blocks():
            for x in block[1:]:
                uf.union(block[0], x)
    return Partition.from_keys(carrier, [uf.find(x) for x in range(carrier.size)])
