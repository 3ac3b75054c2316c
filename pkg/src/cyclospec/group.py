"""Finite cyclic groups Z/nZ and products of cyclic groups.

Elements of a cyclic group are canonical residues 0..n-1 stored as plain
ints; elements of a product group are tuples of residues. Group orders are
capped at 4096: everything here runs at desk scale.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product

MAX_ORDER = 4096


@dataclass(frozen=True)
class CyclicGroup:
    """The integers mod n under addition."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"cyclic group order must be in 1..{MAX_ORDER}, got {self.n}")

    @property
    def order(self) -> int:
        return self.n

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> list[int]:
        return list(range(self.n))

    def nonzero(self) -> list[int]:
        return list(range(1, self.n))

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def neg(self, x: int) -> int:
        return (-x) % self.n

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    def spec_string(self) -> str:
        return f"Z/{self.n}"

    def __str__(self) -> str:
        return self.spec_string()


@dataclass(frozen=True)
class AbelianGroup:
    """A direct product of cyclic groups, Z/n1 x ... x Z/nk."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("need at least one cyclic factor")
        if any(f < 1 for f in self.factors):
            raise ValueError(f"cyclic factors must be >= 1, got {self.factors}")
        if self.order > MAX_ORDER:
            raise ValueError(f"group order {self.order} exceeds the desk-scale cap {MAX_ORDER}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(f) for f in self.factors)))

    def nonzero(self) -> list[tuple[int, ...]]:
        return [e for e in self.elements() if e != self.zero]

    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-a) % f for a, f in zip(x, self.factors))

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == len(self.factors)
            and all(isinstance(a, int) and 0 <= a < f for a, f in zip(x, self.factors))
        )

    def spec_string(self) -> str:
        return "x".join(str(f) for f in self.factors)

    def __str__(self) -> str:
        return self.spec_string()


Group = CyclicGroup | AbelianGroup

_CYCLIC_RE = re.compile(r"^Z/(\d+)$")
_PRODUCT_RE = re.compile(r"^\d+(x\d+)*$")


def parse_group(text: str) -> Group:
    """Parse the wire syntax for groups: "Z/8" is cyclic, "4x3" a product."""
    text = text.strip()
    m = _CYCLIC_RE.match(text)
    if m:
        return CyclicGroup(int(m.group(1)))
    if _PRODUCT_RE.match(text):
        return AbelianGroup(tuple(int(p) for p in text.split("x")))
    raise ValueError(f"cannot parse group {text!r}; expected e.g. 'Z/8' or '4x3'")


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member list."""

    group: Group
    members: tuple

    @property
    def order(self) -> int:
        return len(self.members)

    def validate(self) -> bool:
        """Closure under addition and negation, identity present."""
        g = self.group
        mem = set(self.members)
        if g.zero not in mem:
            return False
        for x in self.members:
            if g.neg(x) not in mem:
                return False
            for y in self.members:
                if g.add(x, y) not in mem:
                    return False
        return True


def subgroup_of_order(group: Group, d: int) -> Subgroup:
    """The canonical subgroup of order d.

    For Z/n this is the multiples of n/d. For a product group, d's prime
    factors are distributed over the cyclic factors greedily (each factor
    absorbs as much of each prime as its own order allows), and the result
    is the product of the per-factor subgroups.
    """
    if d < 1 or group.order % d != 0:
        raise ValueError(f"{d} does not divide the group order {group.order}")
    if isinstance(group, CyclicGroup):
        step = group.n // d
        return Subgroup(group, tuple(range(0, group.n, step)) if d > 1 else (0,))

    # Pick per-factor subgroup orders d_i with prod(d_i) = d.
    capacities = [_factorize(f) for f in group.factors]
    per_factor = [1] * len(group.factors)
    for p, need in _factorize(d).items():
        for i, caps in enumerate(capacities):
            if need == 0:
                break
            take = min(need, caps.get(p, 0))
            per_factor[i] *= p**take
            need -= take
        if need:
            raise ValueError(
                f"no subgroup of order {d} fits the factor shape {group.factors}"
            )
    ranges = [
        range(0, f, f // di) if di > 1 else range(1)
        for f, di in zip(group.factors, per_factor)
    ]
    members = tuple(sorted(product(*ranges)))
    return Subgroup(group, members)


def units(n: int) -> list[int]:
    """Multiplicative units of Z/n, ascending. Empty for n = 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return [u for u in range(1, n) if math.gcd(u, n) == 1]


def cosets(group: Group, h: Subgroup) -> list[list]:
    """Cosets of h, each sorted, identity coset first."""
    if h.group != group:
        raise ValueError("subgroup belongs to a different group")
    seen: set = set()
    out: list[list] = []
    for g in group.elements():
        if g in seen:
            continue
        coset = sorted(group.add(g, m) for m in h.members)
        seen.update(coset)
        out.append(coset)
    return out
