"""Well-pointed minimization: reachability and observability combined.

For functors preserving inverse images both orders of the two steps give
isomorphic results.  Monoid-valued functors over (Z,+,0) or (Q,+,0) can
cancel weights when states are merged, so a quotient of a reachable
coalgebra may have unreachable states; only "simple quotient first, then
reachable part" is guaranteed to return a well-pointed coalgebra there.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .coalgebra import (
    Homomorphism,
    PointedCoalgebra,
    are_isomorphic_pointed,
)
from .finite import FiniteMap
from .functors import FunctorSpec
from .observability import is_simple, simple_quotient
from .reachability import is_reachable, reachable_part


class Order(str, Enum):
    SIMPLE_FIRST = "simple_first"
    REACH_FIRST = "reach_first"


def well_pointed_minimize_traced(
    c: PointedCoalgebra, order: Order | str = Order.SIMPLE_FIRST
) -> tuple[PointedCoalgebra, tuple[tuple[int, ...], ...]]:
    """Like :func:`well_pointed_minimize`, also returning provenance.

    ``provenance[i]`` lists the input states (sorted) that are merged into
    output state ``i``.
    """
    order = Order(order)
    if order is Order.SIMPLE_FIRST:
        q, proj = simple_quotient(c)
        r, incl = reachable_part(q)
        into = incl.map.table  # output state -> block
        out_of = {b: i for i, b in enumerate(into)}
        groups: list[list[int]] = [[] for _ in range(r.size)]
        for x, b in enumerate(proj.map.table):
            if b in out_of:
                groups[out_of[b]].append(x)
        return r, tuple(tuple(g) for g in groups)
    r, incl = reachable_part(c)
    q, proj = simple_quotient(r)
    groups = [[] for _ in range(q.size)]
    for i, b in enumerate(proj.map.table):
        groups[b].append(incl.map(i))
    return q, tuple(tuple(sorted(g)) for g in groups)


def well_pointed_minimize(c: PointedCoalgebra, order: Order | str = Order.SIMPLE_FIRST) -> PointedCoalgebra:
    """Minimize under both reachability and observability, in the given order.

    ``reach_first`` returns whatever the composite produces, even if the
    result is not reachable; use :func:`is_well_pointed` to check.
    """
    return well_pointed_minimize_traced(c, order)[0]


def is_well_pointed(c: PointedCoalgebra) -> bool:
    return is_reachable(c) and is_simple(c)


def orders_agree(c: PointedCoalgebra) -> bool:
    a = well_pointed_minimize(c, Order.SIMPLE_FIRST)
    b = well_pointed_minimize(c, Order.REACH_FIRST)
    return are_isomorphic_pointed(a, b)


def cancel4(monoid: str = "int") -> PointedCoalgebra:
    """``a: 3 b1 - 3 b2;  b1, b2: 1 c;  c: 0`` pointed at ``a``."""
    return PointedCoalgebra.build(
        FunctorSpec.monoid_valued(monoid),
        [{1: 3, 2: -3}, {3: 1}, {3: 1}, {}],
        point=0,
        labels=["a", "b1", "b2", "c"],
    )


@dataclass(frozen=True)
class CancellationReport:
    domain: PointedCoalgebra
    codomain: PointedCoalgebra
    hom: Homomorphism
    domain_reachable: bool
    hom_verified: bool
    hom_surjective: bool
    codomain_reachable: bool


def demonstrate_cancellation_counterexample(second_weight: int = -3, monoid: str = "int") -> CancellationReport:
    """Quotient of a reachable weighted coalgebra that loses reachability.

    Domain ``a: 3 b1 + w b2`` (``w = second_weight``), codomain ``a, b``
    with ``h(b1) = h(b2) = b``.  With ``w = -3`` the weights cancel, so
    ``b`` becomes unreachable.  Over the ``nat`` monoid a negative ``w`` is
    rejected by the constructor.
    """
    spec = FunctorSpec.monoid_valued(monoid)
    domain = PointedCoalgebra.build(spec, [{1: 3, 2: second_weight}, {}, {}], 0, ["a", "b1", "b2"])
    codomain_a = {1: 3 + second_weight}
    codomain = PointedCoalgebra.build(spec, [codomain_a, {}], 0, ["a", "b"])
    h = Homomorphism(FiniteMap(domain.states, codomain.states, (0, 1, 1)), domain, codomain)
    report = CancellationReport(
        domain=domain,
        codomain=codomain,
        hom=h,
        domain_reachable=is_reachable(domain),
        hom_verified=h.verified,
        hom_surjective=h.is_surjective(),
        codomain_reachable=is_reachable(codomain),
    )
    assert report.hom_verified and report.hom_surjective
    return report
