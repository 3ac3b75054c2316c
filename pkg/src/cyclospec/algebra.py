"""The seven symmetric integral relation algebras on three atoms.

Each algebra has atoms 1', a, b with a and b symmetric diversity atoms.
Since every atom is its own converse, a diversity cycle is determined by
the multiset of colors {c(x), c(y), c(z)} of a triple x + y = z, so there
are exactly four cycle classes: aaa, bbb, abb (one a), baa (two a's).
An algebra is fixed by the set of classes it makes mandatory; a class not
in the set is forbidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

ID = "id"


class Color(Enum):
    """Diversity atom color. The identity is handled separately."""

    A = "a"
    B = "b"

    def other(self) -> "Color":
        return Color.B if self is Color.A else Color.A


class CycleClass(Enum):
    """Diversity cycle class, keyed by how many of its three slots are a."""

    BBB = 0
    ABB = 1
    BAA = 2
    AAA = 3

    @classmethod
    def of(cls, c1: Color, c2: Color, c3: Color) -> "CycleClass":
        return cls(sum(c is Color.A for c in (c1, c2, c3)))

    @classmethod
    def from_label(cls, label: str) -> "CycleClass":
        try:
            return cls[label.upper()]
        except KeyError:
            raise ValueError(f"unknown cycle class {label!r}") from None

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Algebra:
    """A symmetric integral relation algebra on atoms 1', a, b."""

    name: str
    mandatory: frozenset[CycleClass]

    def __repr__(self) -> str:
        cycles = ", ".join(c.label for c in sorted(self.mandatory, key=lambda c: -c.value))
        return f"Algebra({self.name}: {cycles})"


_TABLE = (
    ("1_7", (CycleClass.ABB,)),
    ("2_7", (CycleClass.AAA, CycleClass.ABB)),
    ("3_7", (CycleClass.BBB, CycleClass.ABB)),
    ("4_7", (CycleClass.AAA, CycleClass.BBB, CycleClass.ABB)),
    ("5_7", (CycleClass.ABB, CycleClass.BAA)),
    ("6_7", (CycleClass.AAA, CycleClass.ABB, CycleClass.BAA)),
    ("7_7", (CycleClass.AAA, CycleClass.BBB, CycleClass.ABB, CycleClass.BAA)),
)

_CATALOG = tuple(Algebra(name, frozenset(cycles)) for name, cycles in _TABLE)
_BY_NAME = {a.name: a for a in _CATALOG}
# short aliases: "17" .. "77"
_BY_NAME.update({a.name.replace("_", ""): a for a in _CATALOG})


def catalog() -> list[Algebra]:
    """All seven algebras in numbering order 1_7 .. 7_7."""
    return list(_CATALOG)


def by_name(name: str) -> Algebra:
    """Look up an algebra by name ("5_7") or short alias ("57")."""
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; expected 1_7 .. 7_7") from None


@dataclass(frozen=True)
class CompositionLaw:
    """Required sum-set for each ordered color pair.

    required[(c1, c2)] is the exact value c1 + c2 must take in any
    representation, as a subset of {"id", "a", "b"}. Every allowed result
    is also required: mandatory cycles must be witnessed at every element.
    """

    required: dict[tuple[Color, Color], frozenset[str]]

    def __getitem__(self, pair: tuple[Color, Color]) -> frozenset[str]:
        return self.required[pair]


def composition_law(algebra: Algebra) -> CompositionLaw:
    """Derive the composition law from the mandatory cycle classes.

    A diversity color c3 is allowed in c1 + c2 iff the multiset
    {c1, c2, c3} is mandatory, and the identity belongs to c + c for every
    color c (x + (-x) = 0).
    """
    required = {}
    for c1 in Color:
        for c2 in Color:
            parts: set[str] = set()
            if c1 is c2:
                parts.add(ID)
            for c3 in Color:
                if CycleClass.of(c1, c2, c3) in algebra.mandatory:
                    parts.add(c3.value)
            required[(c1, c2)] = frozenset(parts)
    return CompositionLaw(required)


_NEED_ORDER = ((Color.A, Color.A), (Color.A, Color.B), (Color.B, Color.B))


def needs_of(algebra: Algebra, c3: Color) -> list[tuple[Color, Color]]:
    """Unordered color pairs that must witness every c3-colored element.

    For each mandatory cycle class containing c3, the remaining two colors
    form a need; ab and ba collapse. Returned in fixed order aa, ab, bb.
    """
    return [p for p in _NEED_ORDER if CycleClass.of(p[0], p[1], c3) in algebra.mandatory]


def mandatory_mask(algebra: Algebra) -> np.ndarray:
    """Kernel-facing view: uint8[4], index = a-count of the class, 1 = mandatory."""
    out = np.zeros(4, dtype=np.uint8)
    for c in algebra.mandatory:
        out[c.value] = 1
    return out
