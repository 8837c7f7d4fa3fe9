"""Brute-force reference implementations and random instance generators.

Everything here is exponential and meant for small instances; the
generators are pure functions of their arguments so that any failing
randomized check can be replayed from its seed.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .coalgebra import (
    AnyCoalgebra,
    Coalgebra,
    Homomorphism,
    PointedCoalgebra,
    _base,
    coproduct,
    is_homomorphism,
    is_pointed_homomorphism,
    quotient_by,
)
from .errors import TooLarge
from .finite import FiniteMap, FiniteSet, Partition
from .functors import DfaCell, FunctorSpec, Weights
from .observability import behavioural_equivalence, congruence_oracle  # noqa: F401  (re-export)
from .reachability import reachable_part_oracle  # noqa: F401  (re-export)

ENUM_MAX_STATES = 4

# the functors exercised by the randomized suites
STANDARD_SPECS = {
    "dfa": FunctorSpec.dfa("ab"),
    "powerset": FunctorSpec.powerset(),
    "labelled": FunctorSpec.labelled("ab"),
    "bag": FunctorSpec.bag(),
    "int": FunctorSpec.monoid_valued("int"),
    "rational": FunctorSpec.monoid_valued("rational"),
}
INVERSE_IMAGE_PRESERVING = ("dfa", "powerset", "labelled", "bag")


def _check_enum_size(src: AnyCoalgebra, tgt: AnyCoalgebra) -> None:
    if src.size > ENUM_MAX_STATES and tgt.size > ENUM_MAX_STATES:
        raise TooLarge(
            f"enumerating maps {src.size} -> {tgt.size} needs one side <= {ENUM_MAX_STATES}"
        )


def enumerate_homomorphisms(src: AnyCoalgebra, tgt: AnyCoalgebra) -> list[FiniteMap]:
    """Every map ``src -> tgt`` passing :func:`is_homomorphism`, lexicographically."""
    _check_enum_size(src, tgt)
    maps = (FiniteMap(src.states, tgt.states, t) for t in product(range(tgt.size), repeat=src.size))
    return [h for h in maps if is_homomorphism(h, src, tgt)]


def enumerate_pointed_homomorphisms(src: PointedCoalgebra, tgt: PointedCoalgebra) -> list[FiniteMap]:
    """Every pointed homomorphism, by trying all maps with the point fixed."""
    _check_enum_size(src, tgt)
    found = []
    for t in product(range(tgt.size), repeat=src.size):
        if t and t[src.point] != tgt.point:
            continue
        h = FiniteMap(src.states, tgt.states, t)
        if is_pointed_homomorphism(h, src, tgt):
            found.append(h)
    return found


def _weight(rng: random.Random, monoid: str) -> Fraction:
    if monoid == "nat":
        return Fraction(rng.randint(1, 3))
    w = rng.choice([-3, -2, -1, 1, 2, 3])
    if monoid == "rational":
        return Fraction(w, rng.choice([1, 2]))
    return Fraction(w)


def random_value(spec: FunctorSpec, n: int, rng: random.Random, density: float):
    """One random element of ``F {0..n-1}``; ``density`` is a per-edge probability."""
    if spec.kind == "dfa":
        return DfaCell(rng.random() < 0.5, tuple(rng.randrange(n) for _ in spec.symbols))
    if spec.kind == "powerset":
        return frozenset(y for y in range(n) if rng.random() < density)
    if spec.kind == "labelled":
        return frozenset((a, y) for a in spec.symbols for y in range(n) if rng.random() < density)
    return Weights((y, _weight(rng, spec.monoid)) for y in range(n) if rng.random() < density)


def _add_edge(spec: FunctorSpec, v, y: int, rng: random.Random):
    if spec.kind == "powerset":
        return v | {y}
    if spec.kind == "labelled":
        return v | {(rng.choice(spec.symbols), y)}
    if spec.kind == "monoid":
        if y in v:
            return v
        return Weights({**v, y: _weight(rng, spec.monoid)})
    raise ValueError(spec.kind)


def random_coalgebra(
    spec: FunctorSpec, n: int, seed: int, density: float = 0.4, reachable: bool = False
) -> PointedCoalgebra:
    """Random pointed coalgebra on ``n`` states with point 0.

    Deterministic in its arguments.  ``dfa`` draws acceptance and targets
    uniformly and ignores ``density``; set-like functors include each
    possible edge with probability ``density``; weights are drawn from
    ``{1,2,3}`` (nat), ``{-3..3} - {0}`` (int) or that set halved at random
    (rational).  With ``reachable=True`` a random spanning tree from state 0
    is laid down first, so every state is reachable.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(f"{spec}|{n}|{seed}|{density}|{reachable}")
    if spec.kind == "dfa":
        nxt = [[None] * len(spec.symbols) for _ in range(n)]
        if reachable:
            for y in range(1, n):
                free = [(x, a) for x in range(y) for a in range(len(spec.symbols)) if nxt[x][a] is None]
                x, a = rng.choice(free)
                nxt[x][a] = y
        cells = [
            DfaCell(rng.random() < 0.5, tuple(rng.randrange(n) if t is None else t for t in row))
            for row in nxt
        ]
        return PointedCoalgebra(Coalgebra(spec, FiniteSet(n), tuple(cells)), 0)
    values = [random_value(spec, n, rng, density) for _ in range(n)]
    if reachable:
        for y in range(1, n):
            x = rng.randrange(y)
            values[x] = _add_edge(spec, values[x], y, rng)
    return PointedCoalgebra(Coalgebra(spec, FiniteSet(n), tuple(values)), 0)


def random_partition(n: int, rng: random.Random, max_blocks: int | None = None) -> Partition:
    k = rng.randint(1, max_blocks or max(n, 1))
    return Partition.from_keys(n, [rng.randrange(k) for _ in range(n)])


def random_congruence(c: AnyCoalgebra, rng: random.Random) -> Partition:
    """Coarsest congruence refining a random partition."""
    base = _base(c)
    return behavioural_equivalence(base, random_partition(base.size, rng, max_blocks=3))


def random_square(rng: random.Random, max_size: int = 4):
    """A random commuting square ``g.e = m.f`` with ``e`` onto and ``m`` one-to-one.

    Returns ``(e, f, g, m, d)`` where ``d`` is the diagonal used to build it.
    """
    b = rng.randint(1, max_size)
    a = rng.randint(b, max_size)
    c = rng.randint(1, max_size)
    dd = rng.randint(c, max_size)
    e_table = list(range(b)) + [rng.randrange(b) for _ in range(a - b)]
    rng.shuffle(e_table)
    m_table = rng.sample(range(dd), c)
    d_table = [rng.randrange(c) for _ in range(b)]
    e = FiniteMap.from_table(e_table, b)
    m = FiniteMap.from_table(m_table, dd)
    d = FiniteMap.from_table(d_table, c)
    return e, d @ e, m @ d, m, d


def all_values(spec: FunctorSpec, n: int, weights=(-1, 1, 2)):
    """Every element of ``F {0..n-1}`` (weights restricted to ``weights``)."""
    if spec.kind == "dfa":
        for accept in (False, True):
            for nxt in product(range(n), repeat=len(spec.symbols)):
                yield DfaCell(accept, nxt)
        return
    if spec.kind == "powerset":
        atoms = list(range(n))
    elif spec.kind == "labelled":
        atoms = [(a, y) for a in spec.symbols for y in range(n)]
    else:
        ws = [w for w in weights if w != 0 and (spec.monoid != "nat" or w > 0)]
        for combo in product([0, *ws], repeat=n):
            yield Weights(enumerate(combo))
        return
    for mask in range(1 << len(atoms)):
        yield frozenset(atom for i, atom in enumerate(atoms) if mask >> i & 1)


__all__ = [
    "STANDARD_SPECS",
    "INVERSE_IMAGE_PRESERVING",
    "enumerate_homomorphisms",
    "enumerate_pointed_homomorphisms",
    "random_coalgebra",
    "random_value",
    "random_partition",
    "random_congruence",
    "random_square",
    "random_homomorphism",
    "all_values",
    "reachable_part_oracle",
    "congruence_oracle",
]


def random_homomorphism(
    spec: FunctorSpec, n: int, seed: int, extra: int = 2, density: float = 0.4, reachable: bool = False
) -> Homomorphism:
    """A random pointed homomorphism out of ``random_coalgebra(spec, n, seed)``.

    The source is injected into a disjoint union with ``extra`` random
    states, which is then divided by a random congruence; the composite is
    generally neither injective nor surjective.
    """
    src = random_coalgebra(spec, n, seed, density, reachable)
    rng = random.Random(f"hom|{spec}|{n}|{seed}|{extra}")
    if extra:
        other = random_coalgebra(spec, extra, rng.randrange(2**32), density).base
        both, inl, _ = coproduct(src.base, other)
    else:
        both, inl = src.base, FiniteMap.identity(src.states)
    quot, q = quotient_by(both, random_congruence(both, rng))
    h = q @ inl
    return Homomorphism(h, src, PointedCoalgebra(quot, h(src.point)))
