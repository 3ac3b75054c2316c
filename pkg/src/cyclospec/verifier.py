"""Checking whether a two-coloring of a group's nonzero elements represents an algebra.

Two independent checks are provided on purpose and tested against each
other: `verify` walks every triple x + y = z and reports violations as
data, `verify_by_sumsets` compares literal sum-sets against the
composition law. Both are pure functions over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, Color, CycleClass, composition_law, needs_of, ID
from .group import CyclicGroup, Group, parse_group

FORBIDDEN_CYCLE = "ForbiddenCycleWitnessed"
NEED_UNMET = "NeedUnmet"
EMPTY_ATOM = "EmptyAtom"
NOT_SYMMETRIC = "NotSymmetric"


@dataclass(frozen=True)
class Coloring:
    """A partition of a group's nonzero elements into atoms a and b.

    Only the a-set is stored; b is the complement. Construction validates
    that a_set consists of nonzero canonical group elements, but symmetry
    and nonemptiness are the verifier's responsibility so that they can be
    reported as violations rather than raised.
    """

    group: Group
    a_set: frozenset

    def __post_init__(self) -> None:
        for x in self.a_set:
            if not self.group.contains(x):
                raise ValueError(f"{x!r} is not a canonical element of {self.group}")
            if x == self.group.zero:
                raise ValueError("the identity element cannot be colored")

    @property
    def b_set(self) -> frozenset:
        return frozenset(self.group.nonzero()) - self.a_set

    def color_of(self, x) -> Color:
        return Color.A if x in self.a_set else Color.B


@dataclass(frozen=True)
class Violation:
    """One reason a coloring fails to represent an algebra.

    witnesses is present exactly for ForbiddenCycleWitnessed and holds the
    lexicographically least ordered pair (x, y) with x + y = z realizing
    the forbidden class. detail carries the empty atom's name for
    EmptyAtom.
    """

    kind: str
    z: Optional[object] = None
    cycle: Optional[CycleClass] = None
    witnesses: Optional[tuple] = None
    detail: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "z": _element_to_json(self.z),
            "cycle": self.cycle.label if self.cycle else None,
            "witnesses": [_element_to_json(w) for w in self.witnesses] if self.witnesses else None,
            "detail": self.detail,
        }


def _element_to_json(x):
    if x is None:
        return None
    return list(x) if isinstance(x, tuple) else x


def _sort_key(order: dict, v: Violation):
    z_key = order.get(v.z, -1)
    cycle_key = v.cycle.label if v.cycle else ""
    return (z_key, v.kind, cycle_key)


def verify(algebra: Algebra, coloring: Coloring) -> list[Violation]:
    """All violations of the coloring against the algebra, sorted by (z, kind, cycle).

    Structural problems (an empty atom, an asymmetric a-set) short-circuit:
    cycle checks only run on structurally sound colorings.
    """
    g = coloring.group
    nonzero = g.nonzero()
    order = {x: i for i, x in enumerate(nonzero)}

    structural: list[Violation] = []
    if not coloring.a_set:
        structural.append(Violation(EMPTY_ATOM, detail="a"))
    b_set = coloring.b_set
    if not b_set:
        structural.append(Violation(EMPTY_ATOM, detail="b"))
    for x in coloring.a_set:
        if g.neg(x) not in coloring.a_set:
            structural.append(Violation(NOT_SYMMETRIC, z=x, detail="a"))
    if structural:
        return sorted(structural, key=lambda v: _sort_key(order, v))

    color = {x: (Color.A if x in coloring.a_set else Color.B) for x in nonzero}
    out: list[Violation] = []
    for z in nonzero:
        cz = color[z]
        forbidden_hits: dict[CycleClass, tuple] = {}
        met: set[tuple[Color, Color]] = set()
        for x in nonzero:
            y = g.add(z, g.neg(x))
            if y == g.zero:
                continue
            cx, cy = color[x], color[y]
            cls = CycleClass.of(cx, cy, cz)
            if cls in algebra.mandatory:
                met.add((cx, cy) if cx.value <= cy.value else (cy, cx))
            elif cls not in forbidden_hits:
                forbidden_hits[cls] = (x, y)
        for cls, pair in forbidden_hits.items():
            out.append(Violation(FORBIDDEN_CYCLE, z=z, cycle=cls, witnesses=pair))
        for need in needs_of(algebra, cz):
            if need not in met:
                out.append(Violation(NEED_UNMET, z=z, cycle=CycleClass.of(need[0], need[1], cz)))
    return sorted(out, key=lambda v: _sort_key(order, v))


def verify_by_sumsets(algebra: Algebra, coloring: Coloring) -> bool:
    """Sum-set route: c1 + c2 must equal the law's required set exactly.

    Requires a structurally sound coloring (both atoms nonempty, a-set
    symmetric); raises ValueError otherwise.
    """
    g = coloring.group
    a_set, b_set = coloring.a_set, coloring.b_set
    if not a_set or not b_set:
        raise ValueError("both atoms must be nonempty")
    if any(g.neg(x) not in a_set for x in a_set):
        raise ValueError("the a-set must be symmetric")

    law = composition_law(algebra)
    sets = {Color.A: a_set, Color.B: b_set}
    for (c1, c2), parts in law.required.items():
        sumset = {g.add(x, y) for x in sets[c1] for y in sets[c2]}
        target: set = set()
        if ID in parts:
            target.add(g.zero)
        if Color.A.value in parts:
            target |= a_set
        if Color.B.value in parts:
            target |= b_set
        if sumset != target:
            return False
    return True


def coloring_to_json(coloring: Coloring) -> dict:
    """Wire format: {"group": "Z/8", "A": [2, 3, 5, 6]}."""
    return {
        "group": coloring.group.spec_string(),
        "A": sorted(_element_to_json(x) for x in coloring.a_set),
    }


def coloring_from_json(data: dict) -> Coloring:
    """Inverse of coloring_to_json. Raises ValueError on malformed input."""
    if not isinstance(data, dict) or "group" not in data or "A" not in data:
        raise ValueError("coloring JSON needs 'group' and 'A' keys")
    g = parse_group(data["group"])
    raw = data["A"]
    if not isinstance(raw, list):
        raise ValueError("'A' must be a list of elements")
    if isinstance(g, CyclicGroup):
        a_set = frozenset(int(x) for x in raw)
    else:
        a_set = frozenset(tuple(int(c) for c in x) for x in raw)
    return Coloring(g, a_set)
