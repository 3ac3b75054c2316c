"""Closed-form representations over Z/n, plus the abelian route for 4_7.

Every construction is re-checked by the verifier before it is returned;
an invalid output raises RuntimeError since it would mean a bug here, not
bad input. Where no closed form applies the sentinels NO_CONSTRUCTION
(this n has none) and NO_CLOSED_FORM (the algebra has no formula at all,
only search; 7_7) are returned.
"""

from __future__ import annotations

from .algebra import Algebra, by_name
from .group import CyclicGroup, Group, Subgroup, divisors, subgroup_of_order
from .verifier import Coloring, verify


class _NoConstruction:
    def __repr__(self) -> str:
        return "NoConstruction"


class _NoClosedForm:
    def __repr__(self) -> str:
        return "NoClosedForm"


NO_CONSTRUCTION = _NoConstruction()
NO_CLOSED_FORM = _NoClosedForm()


def _checked(algebra: Algebra, coloring: Coloring) -> Coloring:
    violations = verify(algebra, coloring)
    if violations:
        raise RuntimeError(
            f"construction for {algebra.name} over {coloring.group} is invalid: {violations[:3]}"
        )
    return coloring


def construct(algebra: Algebra, n: int):
    """Closed-form coloring of Z/n, or NO_CONSTRUCTION / NO_CLOSED_FORM."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    name = algebra.name
    if name == "1_7":
        if n != 4:
            return NO_CONSTRUCTION
        return _checked(algebra, Coloring(CyclicGroup(4), frozenset({2})))
    if name == "2_7":
        if n < 6 or n % 2:
            return NO_CONSTRUCTION
        evens = frozenset(range(2, n, 2))
        return _checked(algebra, Coloring(CyclicGroup(n), evens))
    if name == "3_7":
        # The singleton atom is the one whose self-composition is pure
        # identity; with the catalog's labeling that is a, so A = {n/2}.
        if n < 6 or n % 2:
            return NO_CONSTRUCTION
        return _checked(algebra, Coloring(CyclicGroup(n), frozenset({n // 2})))
    if name == "4_7":
        k = _least_valid_divisor(n)
        if k is None:
            return NO_CONSTRUCTION
        sub = subgroup_of_order(CyclicGroup(n), k)
        a_set = frozenset(sub.members) - {0}
        return _checked(algebra, Coloring(CyclicGroup(n), a_set))
    if name == "5_7":
        if n != 5:
            return NO_CONSTRUCTION
        return _checked(algebra, Coloring(CyclicGroup(5), frozenset({1, 4})))
    if name == "6_7":
        if n == 8:
            return _checked(algebra, Coloring(CyclicGroup(8), frozenset({2, 3, 5, 6})))
        if n < 11 or n == 15:
            # Z/15 admits exactly two symmetric complete sum-free sets,
            # {2,3,7,8,12,13} and {1,4,6,9,11,14}, and both reduce mod 5 to
            # {2,3}, forcing A into the classes {0,1,4} mod 5; then A+B
            # avoids multiples of 5, so 5 and 10 are never a mixed sum and
            # the a+b law fails. Exhaustive search over all 2^7 colorings
            # confirms Z/15 carries no representation at all.
            return NO_CONSTRUCTION
        b_set = sumfree_6_7(n)
        a_set = frozenset(range(1, n)) - b_set
        return _checked(algebra, Coloring(CyclicGroup(n), a_set))
    if name == "7_7":
        return NO_CLOSED_FORM
    raise ValueError(f"unknown algebra {name!r}")


def _least_valid_divisor(n: int):
    """Least divisor k of n with k > 2 and n/k > 2, or None."""
    for k in divisors(n):
        if k > 2 and n // k > 2:
            return k
    return None


def sumfree_6_7(n: int) -> frozenset[int]:
    """Symmetric complete sum-free subset of Z/n for n >= 11.

    Case split on n mod 6 / mod 3; each branch is an interval pattern that
    is symmetric (closed under negation), sum-free, and whose sums cover
    the complement and zero. The b-atom of the 6_7 construction, except at
    n = 15 where no coloring satisfies the full law (see construct).

    A verifier sweep over 11 <= n <= 1000 shows the interval patterns hold
    everywhere except n = 15: the mod-6 pattern there gives {2,3,12,13},
    whose sums miss 7 and 8. The stored fallback {2,3,7,8,12,13} is the
    lexicographically least of the two sets found by exhaustive search.
    """
    if n < 11:
        raise ValueError(f"need n >= 11, got {n}")
    if n == 15:
        return frozenset({2, 3, 7, 8, 12, 13})
    if n % 3 == 2:
        k = (n - 2) // 3
        out = set(range(k + 1, 2 * k + 2))
    elif n % 3 == 1:
        k = (n - 1) // 3
        out = {k, 2 * k + 1} | set(range(k + 2, 2 * k))
    elif n % 6 == 0:
        k = n // 6
        out = set(range(k, 2 * k)) | set(range(4 * k + 1, 5 * k + 1))
    else:  # n % 6 == 3
        k = (n - 3) // 6
        out = set(range(k, 2 * k)) | set(range(4 * k + 4, 5 * k + 4))
    return frozenset(out)


def abelian_4_7_representable(group: Group) -> bool:
    """Whether 4_7 has a representation over the finite abelian group.

    Holds iff the order has a divisor d with 2 < d < order/2, i.e. iff
    some subgroup has more than two elements and more than two cosets.
    """
    m = group.order
    return any(2 < d and 2 * d < m for d in divisors(m))


def construct_4_7_abelian(group: Group) -> Coloring:
    """4_7 coloring over an abelian group: A = H - {0} for the subgroup H
    of the least valid order. Raises ValueError when none exists."""
    m = group.order
    least = None
    for d in divisors(m):
        if 2 < d and 2 * d < m:
            least = d
            break
    if least is None:
        raise ValueError(f"4_7 is not representable over a group of order {m}")
    sub = subgroup_of_order(group, least)
    a_set = frozenset(sub.members) - {group.zero}
    return _checked(by_name("4_7"), Coloring(group, a_set))
