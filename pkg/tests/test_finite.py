import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from coalgmin.errors import (
    MixedCarriers,
    MixedCodomains,
    NotInjective,
    NotSurjective,
    SquareDoesNotCommute,
)
from coalgmin.finite import (
    FiniteMap,
    FiniteSet,
    Partition,
    diagonal_fill_in,
    image_factorize,
    intersect_injections,
    join_partitions,
)
from coalgmin.observability import set_partitions
from coalgmin.oracles import random_square


@st.composite
def finite_maps(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    k = draw(st.integers(1, max_size))
    table = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return FiniteMap.from_table(table, k)


def test_finite_set_labels_must_be_distinct():
    with pytest.raises(ValueError):
        FiniteSet(2, ("a", "a"))
    with pytest.raises(ValueError):
        FiniteSet(2, ("a",))


def test_map_totality_checked():
    with pytest.raises(ValueError):
        FiniteMap.from_table([0, 2], 2)


def test_image_factorize_identity():
    e, m, image = image_factorize(FiniteMap.identity(FiniteSet(3)))
    assert image.size == 3
    assert e.table == m.table == (0, 1, 2)


def test_image_factorize_collapsing():
    e, m, image = image_factorize(FiniteMap.from_table([0, 0, 1], 2))
    assert image.size == len({0, 0, 1}) == 2
    assert e.table == (0, 0, 1)
    assert m.table == (0, 1)


def test_image_factorize_first_occurrence_order():
    e, m, _ = image_factorize(FiniteMap.from_table([3, 1, 3, 0], 4))
    assert m.table == (3, 1, 0)
    assert e.table == (0, 1, 0, 2)


def test_image_factorize_empty_domain():
    e, m, image = image_factorize(FiniteMap.from_table([], 1))
    assert image.size == 0
    assert m.table == () and m.codomain.size == 1


@given(finite_maps())
def test_factorization_laws(f):
    e, m, _ = image_factorize(f)
    assert (m @ e).table == f.table
    assert e.is_surjective()
    assert m.is_injective()


def test_fill_in_identities():
    f = FiniteMap.from_table([1, 0], 2)
    i = FiniteMap.identity(FiniteSet(2))
    assert diagonal_fill_in(i, f, f, i) == f


def test_fill_in_constant_on_fibre():
    e = FiniteMap.from_table([0, 0], 1)
    f = FiniteMap.from_table([0, 0], 3)
    m = FiniteMap.from_table([2, 0, 1], 3)
    g = FiniteMap.from_table([2], 3)  # g . e = m . f = [2, 2]
    d = diagonal_fill_in(e, f, g, m)
    assert d.table == (0,)


def test_fill_in_rejects_non_commuting_square():
    e = FiniteMap.from_table([0, 0], 1)
    f = FiniteMap.from_table([0, 1], 2)
    m = FiniteMap.identity(FiniteSet(2))
    g = FiniteMap.from_table([0], 2)
    with pytest.raises(SquareDoesNotCommute):
        diagonal_fill_in(e, f, g, m)


def test_fill_in_checks_classes():
    not_onto = FiniteMap.from_table([0], 2)
    i1 = FiniteMap.identity(FiniteSet(1))
    with pytest.raises(NotSurjective):
        diagonal_fill_in(not_onto, i1, FiniteMap.from_table([0, 0], 1), i1)
    not_into = FiniteMap.from_table([0, 0], 1)
    i2 = FiniteMap.identity(FiniteSet(2))
    with pytest.raises(NotInjective):
        diagonal_fill_in(i2, i2, not_into, not_into)


def _all_maps(n, k):
    return [FiniteMap.from_table(t, k) for t in product(range(k), repeat=n)]


@pytest.mark.parametrize("seed", range(40))
def test_fill_in_unique_by_exhaustion(seed):
    e, f, g, m, _ = random_square(random.Random(seed))
    fills = [
        d for d in _all_maps(e.codomain.size, f.codomain.size)
        if (m @ d).table == g.table and (d @ e).table == f.table
    ]
    assert len(fills) == 1
    assert diagonal_fill_in(e, f, g, m) == fills[0]


@given(finite_maps(4))
def test_bijection_is_surjection_and_injection(f):
    assert f.is_bijective() == (f.is_injective() and f.is_surjective())
    if f.is_bijective():
        assert f.domain.size == f.codomain.size


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 3)])
def test_left_cancellation_of_injections(n, k):
    # if m . g is injective and m is injective then g is injective
    for g in _all_maps(n, k):
        for m in _all_maps(k, 3):
            if m.is_injective() and (m @ g).is_injective():
                assert g.is_injective()


def _image(m):
    return set(m.table)


def test_intersect_empty_list_is_identity():
    x = FiniteSet(4)
    assert intersect_injections([], x) == FiniteMap.identity(x)


def test_intersect_two():
    a = FiniteMap.from_table([0, 1], 3)
    b = FiniteMap.from_table([1, 2], 3)
    assert intersect_injections([a, b]).table == (1,)


def test_intersect_disjoint():
    a = FiniteMap.from_table([0], 2)
    b = FiniteMap.from_table([1], 2)
    assert intersect_injections([a, b]).domain.size == 0


def test_intersect_mixed_codomains():
    with pytest.raises(MixedCodomains):
        intersect_injections([FiniteMap.from_table([0], 2), FiniteMap.from_table([0], 3)])


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.sets(st.integers(0, n - 1)), max_size=4).map(lambda subs: (n, subs))
))
def test_intersection_is_greatest_lower_bound(data):
    n, subsets = data
    subs = [FiniteMap.from_table(sorted(s), n) for s in subsets]
    meet = _image(intersect_injections(subs, FiniteSet(n)))
    for s in subsets:
        assert meet <= s
    # greatest: every set below all inputs is below the meet
    for mask in range(1 << n):
        cand = {x for x in range(n) if mask >> x & 1}
        if all(cand <= s for s in subsets):
            assert cand <= meet


def test_partition_canonical_numbering():
    p = Partition(FiniteSet(4), (2, 0, 2, 1))
    assert p.block_of == (0, 1, 0, 2)
    assert p.blocks() == [[0, 2], [1], [3]]
    with pytest.raises(ValueError):
        Partition(FiniteSet(2), (0, 2), 3)


def test_join_discrete_is_unit():
    d = Partition.discrete(3)
    assert join_partitions([d]) == d
    assert join_partitions([], 2) == Partition.from_blocks(2, [[0], [1]])


def test_join_transitive():
    p = Partition.from_blocks(3, [[0, 1], [2]])
    q = Partition.from_blocks(3, [[0], [1, 2]])
    assert join_partitions([p, q]) == Partition.indiscrete(3)


def test_join_mixed_carriers():
    with pytest.raises(MixedCarriers):
        join_partitions([Partition.discrete(2), Partition.discrete(3)])


ALL_PARTITIONS = {n: [Partition(FiniteSet(n), rgs) for rgs in set_partitions(n)] for n in range(6)}


def test_partition_enumeration_counts_bell_numbers():
    assert [len(ALL_PARTITIONS[n]) for n in range(6)] == [1, 1, 2, 5, 15, 52]


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.sampled_from(ALL_PARTITIONS[n]), max_size=3).map(lambda ps: (n, ps))
))
def test_join_is_least_upper_bound(data):
    n, ps = data
    j = join_partitions(ps, n)
    assert all(p.refines(j) for p in ps)
    for cand in ALL_PARTITIONS[n]:
        if all(p.refines(cand) for p in ps):
            assert j.refines(cand)
