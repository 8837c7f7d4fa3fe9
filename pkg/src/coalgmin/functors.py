"""Signature functors on finite sets.

A :class:`FunctorSpec` names one of the supported functors:

* ``dfa``       -- ``F X = 2 x X^A`` (deterministic automata),
* ``powerset``  -- ``F X = P X`` (unlabelled transition systems),
* ``labelled``  -- ``F X = P(A x X)`` (labelled transition systems),
* ``monoid``    -- ``F X = M^(X)``, finite-support weight functions into one
  of the monoids (N,+,0) ("bag"), (Z,+,0), (Q,+,0).

Elements of ``F X`` for ``X = {0..n-1}`` are plain immutable Python values
(:class:`DfaCell`, ``frozenset`` and :class:`Weights`) in a normalized form,
so equality in ``F X`` is ``==``.  Each kind is implemented by a small class
registered in ``KINDS``; adding a functor means adding one more entry.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .errors import InvalidValue, StateOutOfRange
from .finite import FiniteMap

MONOIDS = ("nat", "int", "rational")


@dataclass(frozen=True)
class FunctorSpec:
    kind: str
    symbols: tuple[str, ...] = ()
    monoid: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.kind not in KINDS:
            raise InvalidValue(f"unknown functor kind {self.kind!r}")
        if self.kind in ("dfa", "labelled"):
            if not self.symbols:
                raise InvalidValue(f"{self.kind} functor needs a non-empty symbol list")
            if len(set(self.symbols)) != len(self.symbols):
                raise InvalidValue(f"duplicate symbols in {self.symbols}")
        elif self.symbols:
            raise InvalidValue(f"{self.kind} functor takes no symbols")
        if self.kind == "monoid":
            if self.monoid not in MONOIDS:
                raise InvalidValue(f"unknown monoid {self.monoid!r}")
        elif self.monoid is not None:
            raise InvalidValue(f"{self.kind} functor takes no monoid")

    @classmethod
    def dfa(cls, alphabet: Iterable[str]) -> "FunctorSpec":
        return cls("dfa", tuple(alphabet))

    @classmethod
    def powerset(cls) -> "FunctorSpec":
        return cls("powerset")

    @classmethod
    def labelled(cls, labels: Iterable[str]) -> "FunctorSpec":
        return cls("labelled", tuple(labels))

    @classmethod
    def monoid_valued(cls, monoid: str) -> "FunctorSpec":
        return cls("monoid", monoid=monoid)

    @classmethod
    def bag(cls) -> "FunctorSpec":
        return cls("monoid", monoid="nat")

    @property
    def is_bag(self) -> bool:
        return self.kind == "monoid" and self.monoid == "nat"

    @property
    def cancellative(self) -> bool:
        """Whether pushing a value forward can lose part of its support.

        This is exactly the case for monoids with additive inverses; these
        functors do not preserve inverse images.
        """
        return self.kind == "monoid" and self.monoid in ("int", "rational")

    def __str__(self):
        if self.kind in ("dfa", "labelled"):
            return f"{self.kind}({','.join(self.symbols)})"
        if self.kind == "monoid":
            return "bag" if self.monoid == "nat" else f"monoid({self.monoid})"
        return self.kind


@dataclass(frozen=True)
class DfaCell:
    """``(accept, next)`` with ``next[i]`` the successor under ``alphabet[i]``."""

    accept: bool
    next: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "next", tuple(self.next))
        object.__setattr__(self, "accept", bool(self.accept))


class Weights(Mapping):
    """Finite-support function from state indices to exact rationals.

    Built from pairs (or a mapping); weights for repeated states are summed
    and zero entries dropped, so the stored form is normalized.
    """

    __slots__ = ("_items", "_dict")

    def __init__(self, data: Mapping | Iterable[tuple[int, Any]] = ()):
        pairs = data.items() if isinstance(data, Mapping) else data
        acc: dict[int, Fraction] = {}
        for x, w in pairs:
            acc[x] = acc.get(x, Fraction(0)) + Fraction(w)
        items = tuple(sorted((x, w) for x, w in acc.items() if w != 0))
        self._items = items
        self._dict = dict(items)

    def __getitem__(self, x: int) -> Fraction:
        return self._dict[x]

    def get(self, x, default=Fraction(0)):
        return self._dict.get(x, default)

    def __iter__(self):
        return iter(self._dict)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, Weights):
            return self._items == other._items
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = ", ".join(f"{x}: {w}" for x, w in self._items)
        return f"Weights({{{body}}})"

    def total(self) -> Fraction:
        return sum((w for _, w in self._items), Fraction(0))


class _Dfa:
    def check(self, spec, v, n):
        if not isinstance(v, DfaCell):
            raise InvalidValue(f"expected a DfaCell, got {v!r}")
        if len(v.next) != len(spec.symbols):
            raise InvalidValue(f"transition table not total on alphabet {spec.symbols}")
        _check_states(v.next, n)

    def push(self, spec, v, table):
        return DfaCell(v.accept, tuple(table[y] for y in v.next))

    def successors(self, spec, v):
        return list(dict.fromkeys(v.next))


class _Powerset:
    def check(self, spec, v, n):
        if not isinstance(v, frozenset):
            raise InvalidValue(f"expected a frozenset of states, got {v!r}")
        _check_states(v, n)

    def push(self, spec, v, table):
        return frozenset(table[y] for y in v)

    def successors(self, spec, v):
        return sorted(v)


class _Labelled:
    def check(self, spec, v, n):
        if not isinstance(v, frozenset):
            raise InvalidValue(f"expected a frozenset of (label, state) pairs, got {v!r}")
        for pair in v:
            if not (isinstance(pair, tuple) and len(pair) == 2):
                raise InvalidValue(f"malformed labelled transition {pair!r}")
            if pair[0] not in spec.symbols:
                raise InvalidValue(f"unknown label {pair[0]!r}")
        _check_states((y for _, y in v), n)

    def push(self, spec, v, table):
        return frozenset((a, table[y]) for a, y in v)

    def successors(self, spec, v):
        return sorted({y for _, y in v})


class _Monoid:
    def check(self, spec, v, n):
        if not isinstance(v, Weights):
            raise InvalidValue(f"expected Weights, got {v!r}")
        _check_states(v, n)
        for x, w in v.items():
            if spec.monoid in ("nat", "int") and w.denominator != 1:
                raise InvalidValue(f"non-integral weight {w} on state {x} in {spec.monoid} monoid")
            if spec.monoid == "nat" and w < 0:
                raise InvalidValue(f"negative weight {w} on state {x} in nat monoid")

    def push(self, spec, v, table):
        return Weights((table[y], w) for y, w in v._items)

    def successors(self, spec, v):
        return list(v)


KINDS = {"dfa": _Dfa(), "powerset": _Powerset(), "labelled": _Labelled(), "monoid": _Monoid()}


def _check_states(states, n):
    for y in states:
        if not (isinstance(y, int) and 0 <= y < n):
            raise StateOutOfRange(f"state index {y!r} outside carrier of size {n}")


def check_value(spec: FunctorSpec, v, n: int) -> None:
    """Raise unless ``v`` is a well-formed element of ``F {0..n-1}``."""
    KINDS[spec.kind].check(spec, v, n)


def push(spec: FunctorSpec, v, table: Sequence[int]):
    """``F(f)(v)`` for a map given by its table; no validation."""
    return KINDS[spec.kind].push(spec, v, table)


def apply_map(spec: FunctorSpec, f: FiniteMap, v):
    """``F(f)(v)``.  Monoid weights of merged states are summed."""
    check_value(spec, v, f.domain.size)
    return push(spec, v, f.table)


def successors(spec: FunctorSpec, v) -> list[int]:
    """Support of ``v`` as a duplicate-free list in the canonical visiting order."""
    return KINDS[spec.kind].successors(spec, v)


def support(spec: FunctorSpec, v) -> frozenset[int]:
    return frozenset(successors(spec, v))


def value_equal(spec: FunctorSpec, v1, v2) -> bool:
    # values are stored normalized, so structural equality is equality in F X
    return v1 == v2


def make_value(spec: FunctorSpec, raw) -> Any:
    """Coerce a loosely typed value (lists, dicts, tuples) into normalized form.

    ``dfa``: ``(accept, next)`` with ``next`` a sequence in alphabet order or a
    symbol-keyed mapping; ``powerset``: iterable of states; ``labelled``:
    iterable of ``(label, state)``; ``monoid``: mapping or pairs.
    """
    if spec.kind == "dfa":
        if isinstance(raw, DfaCell):
            return raw
        accept, nxt = raw
        if isinstance(nxt, Mapping):
            missing = [a for a in spec.symbols if a not in nxt]
            if missing:
                raise InvalidValue(f"no transition for symbols {missing}")
            nxt = [nxt[a] for a in spec.symbols]
        return DfaCell(accept, tuple(nxt))
    if spec.kind == "powerset":
        return frozenset(raw)
    if spec.kind == "labelled":
        return frozenset((a, y) for a, y in raw)
    return raw if isinstance(raw, Weights) else Weights(raw)


def zero(spec: FunctorSpec, n: int = 0):
    """A value with empty support (not available for ``dfa``)."""
    if spec.kind == "dfa":
        raise InvalidValue("dfa cells always have successors")
    if spec.kind == "monoid":
        return Weights()
    return frozenset()
