"""Reachability and observability minimization for finite coalgebras."""
from .coalgebra import (
    Coalgebra,
    Homomorphism,
    PointedCoalgebra,
    are_isomorphic_pointed,
    factorize_homomorphism,
    find_pointed_homomorphism,
    is_homomorphism,
    is_pointed_homomorphism,
)
from .finite import (
    FiniteMap,
    FiniteSet,
    Partition,
    diagonal_fill_in,
    image_factorize,
    intersect_injections,
    join_partitions,
)
from .functors import DfaCell, FunctorSpec, Weights, apply_map, support, value_equal
from .observability import (
    behavioural_equivalence,
    congruence_oracle,
    dfa_minimize_reference,
    is_simple,
    simple_quotient,
)
from .pipeline import (
    Order,
    demonstrate_cancellation_counterexample,
    orders_agree,
    well_pointed_minimize,
)
from .reachability import is_reachable, reachable_part, reachable_part_oracle
from .unravelling import UnravelResult, count_automorphisms_over, is_tree, unravel

__version__ = "0.1.0"

__all__ = [
    "Coalgebra",
    "Homomorphism",
    "PointedCoalgebra",
    "are_isomorphic_pointed",
    "factorize_homomorphism",
    "find_pointed_homomorphism",
    "is_homomorphism",
    "is_pointed_homomorphism",
    "FiniteMap",
    "FiniteSet",
    "Partition",
    "diagonal_fill_in",
    "image_factorize",
    "intersect_injections",
    "join_partitions",
    "DfaCell",
    "FunctorSpec",
    "Weights",
    "apply_map",
    "support",
    "value_equal",
    "behavioural_equivalence",
    "congruence_oracle",
    "dfa_minimize_reference",
    "is_simple",
    "simple_quotient",
    "Order",
    "demonstrate_cancellation_counterexample",
    "orders_agree",
    "well_pointed_minimize",
    "is_reachable",
    "reachable_part",
    "reachable_part_oracle",
    "UnravelResult",
    "count_automorphisms_over",
    "is_tree",
    "unravel",
]
