from itertools import product
from math import factorial

import pytest
from hypothesis import assume, given, strategies as st

from coalgmin import (
    FunctorSpec,
    PointedCoalgebra,
    count_automorphisms_over,
    is_tree,
    unravel,
)
from coalgmin.errors import Incomplete, TooLarge, WrongFunctor
from coalgmin.oracles import random_coalgebra
from coalgmin.reachability import is_reachable
from coalgmin.unravelling import sibling_symmetry_count
from coalgmin.coalgebra import iter_homomorphisms

from conftest import fig4a, fig6a, fig6b


def test_fig6a_siblings():
    r = unravel(fig6a(), 3)
    assert r.tree.size == 3
    assert r.complete and r.onto.verified and r.onto.is_surjective()
    assert r.onto.map.table == (0, 1, 1)
    assert is_tree(r.tree)
    assert count_automorphisms_over(r) == 2


def test_fig6b_loop_truncated():
    r = unravel(fig6b(), 5)
    assert r.tree.size == 6
    assert not r.complete
    assert not r.onto.verified
    assert r.depth_used == 5
    # a chain: node i points at node i+1
    assert [sorted(v) for v in r.tree.structure] == [[1], [2], [3], [4], [5], []]


def test_dead_state_is_a_single_root():
    r = unravel(PointedCoalgebra.build(FunctorSpec.bag(), [{}]), 0)
    assert r.tree.size == 1 and r.complete
    assert count_automorphisms_over(r) == 1


def test_depth_zero_truncates_nonempty_root():
    r = unravel(fig6a(), 0)
    assert r.tree.size == 1 and not r.complete
    with pytest.raises(Incomplete):
        count_automorphisms_over(r)


def test_three_siblings():
    c = PointedCoalgebra.build(FunctorSpec.bag(), [{1: 3}, {}])
    r = unravel(c, 2)
    # brute force: permutations of the size-3 fibre that fix the root
    from itertools import permutations

    brute = sum(1 for _ in permutations([1, 2, 3]))
    assert count_automorphisms_over(r) == brute == 6


def test_unravel_needs_bag():
    with pytest.raises(WrongFunctor):
        unravel(fig4a(), 3)
    with pytest.raises(WrongFunctor):
        is_tree(fig4a())


def test_is_tree_examples():
    assert not is_tree(fig6a())
    assert not is_tree(fig6b())


@given(st.integers(1, 5), st.integers(0, 10**6))
def test_complete_unravellings_are_trees(n, seed):
    c = random_coalgebra(FunctorSpec.bag(), n, seed, density=0.3)
    try:
        r = unravel(c, 5, max_nodes=5000)
    except TooLarge:
        assume(False)
    if r.complete:
        assert is_tree(r.tree)
        assert r.onto.verified and r.onto.is_surjective()
    else:
        assert not r.onto.verified
    assert is_reachable(r.tree)


def _acyclic_bag(rng_weights):
    # state i only points to states > i, so unravellings are finite
    return PointedCoalgebra.build(
        FunctorSpec.bag(), [{j: w for j, w in row.items() if j > i} for i, row in enumerate(rng_weights)]
    )


@given(st.lists(st.dictionaries(st.integers(0, 3), st.integers(1, 2), max_size=2), min_size=1, max_size=4))
def test_automorphism_count_closed_form(rows):
    rows = [{j: w for j, w in row.items() if j < len(rows)} for row in rows]
    c = _acyclic_bag(rows)
    r = unravel(c, 10)
    assert r.complete
    if r.tree.size <= 12:
        count = count_automorphisms_over(r)
        assert count >= 1
        assert count == sibling_symmetry_count(r)


def test_fig6a_tree_is_mor_minimal_among_equal_size_sources():
    # every pointed homomorphism from a reachable 3-state bag coalgebra
    # into the unravelled tree is a bijection
    tree = unravel(fig6a(), 3).tree
    rows = [dict(zip(range(3), ws)) for ws in product(range(3), repeat=3)]
    checked = 0
    for structure in product(rows, repeat=3):
        src = PointedCoalgebra.build(FunctorSpec.bag(), list(structure))
        if not is_reachable(src):
            continue
        for h in iter_homomorphisms(src, tree, pointed=True):
            checked += 1
            assert h.is_bijective()
    assert checked > 0


def test_sibling_formula_on_fig6a():
    assert sibling_symmetry_count(unravel(fig6a(), 2)) == factorial(2)
