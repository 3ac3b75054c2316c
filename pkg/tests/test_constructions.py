import pytest

from cyclospec.algebra import by_name, catalog
from cyclospec.constructions import (
    NO_CLOSED_FORM,
    NO_CONSTRUCTION,
    abelian_4_7_representable,
    construct,
    construct_4_7_abelian,
    sumfree_6_7,
)
from cyclospec.group import AbelianGroup, CyclicGroup
from cyclospec.verifier import verify


def test_frozen_examples():
    assert construct(by_name("1_7"), 4).a_set == frozenset({2})
    assert construct(by_name("2_7"), 8).a_set == frozenset({2, 4, 6})
    assert construct(by_name("3_7"), 10).a_set == frozenset({5})
    assert construct(by_name("4_7"), 9).a_set == frozenset({3, 6})
    assert construct(by_name("5_7"), 5).a_set == frozenset({1, 4})
    assert construct(by_name("6_7"), 8).a_set == frozenset({2, 3, 5, 6})


def test_sentinels():
    assert construct(by_name("1_7"), 5) is NO_CONSTRUCTION
    assert construct(by_name("2_7"), 7) is NO_CONSTRUCTION
    assert construct(by_name("5_7"), 10) is NO_CONSTRUCTION
    assert construct(by_name("4_7"), 10) is NO_CONSTRUCTION
    for n in (3, 100):
        assert construct(by_name("7_7"), n) is NO_CLOSED_FORM
    with pytest.raises(ValueError):
        construct(by_name("1_7"), 0)


def test_6_7_has_no_coloring_at_15():
    """Z/15 is the one order >= 11 where the interval patterns cannot be
    patched: no symmetric coloring satisfies the full law there."""
    assert construct(by_name("6_7"), 15) is NO_CONSTRUCTION


def test_sumfree_6_7_frozen_values():
    assert sumfree_6_7(11) == frozenset({4, 5, 6, 7})
    assert sumfree_6_7(12) == frozenset({2, 3, 9, 10})
    assert sumfree_6_7(13) == frozenset({4, 6, 7, 9})
    assert sumfree_6_7(15) == frozenset({2, 3, 7, 8, 12, 13})
    with pytest.raises(ValueError):
        sumfree_6_7(10)


@pytest.mark.parametrize("n", range(11, 151))
def test_sumfree_6_7_contract(n):
    """Symmetric, sum-free, and sums covering exactly the complement plus zero."""
    b = sumfree_6_7(n)
    assert b and all(0 < x < n for x in b)
    assert all((n - x) % n in b for x in b)
    sums = {(x + y) % n for x in b for y in b}
    assert not (sums & b)
    assert sums == (set(range(n)) - b)


def test_construct_sweep_verifies():
    produced = 0
    for algebra in catalog():
        for n in range(1, 121):
            result = construct(algebra, n)
            if result is NO_CONSTRUCTION or result is NO_CLOSED_FORM:
                continue
            assert verify(algebra, result) == [], f"{algebra.name} n={n}"
            produced += 1
    assert produced == 299


def test_abelian_predicate():
    assert not abelian_4_7_representable(CyclicGroup(8))
    assert abelian_4_7_representable(CyclicGroup(9))
    assert not abelian_4_7_representable(AbelianGroup((2, 2)))
    assert abelian_4_7_representable(AbelianGroup((2, 8)))
    assert abelian_4_7_representable(AbelianGroup((3, 3)))
    assert not abelian_4_7_representable(AbelianGroup((2, 3)))


def test_construct_4_7_abelian():
    for params in ((2, 8), (3, 3), (4, 4), (2, 2, 3)):
        g = AbelianGroup(params)
        c = construct_4_7_abelian(g)
        assert verify(by_name("4_7"), c) == []
    with pytest.raises(ValueError):
        construct_4_7_abelian(AbelianGroup((2, 2)))
    with pytest.raises(ValueError):
        construct_4_7_abelian(CyclicGroup(7))


def test_construct_matches_cyclic_route_for_4_7():
    c_cyclic = construct(by_name("4_7"), 12)
    c_abelian = construct_4_7_abelian(CyclicGroup(12))
    assert c_cyclic.a_set == c_abelian.a_set
