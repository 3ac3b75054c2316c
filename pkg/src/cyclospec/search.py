"""Exhaustive and randomized search for representations over Z/n.

A symmetric coloring of Z/n is encoded as a PairClassMask: one bit per
pair class {x, n-x} for x in 1..n//2, bit set = colored a. Searching all
2^(n//2) masks is feasible at desk scale; the hot loops live in
cyclospec.kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import Algebra, mandatory_mask
from .group import CyclicGroup, units
from .verifier import Coloring

DEFAULT_LIMIT = 40


class _NotFound:
    """Negative result of random_search."""

    def __repr__(self) -> str:
        return "NotFound"


NOT_FOUND = _NotFound()


@dataclass(frozen=True)
class PairClassMask:
    """Symmetric coloring of Z/n, one bit per pair class, bit = colored a."""

    n: int
    bits: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.n // 2:
            raise ValueError(f"need {self.n // 2} bits for n={self.n}, got {len(self.bits)}")

    @classmethod
    def from_int(cls, n: int, value: int) -> "PairClassMask":
        m = n // 2
        if not 0 <= value < (1 << m):
            raise ValueError(f"mask {value} out of range for n={n}")
        return cls(n, tuple(bool((value >> i) & 1) for i in range(m)))

    def to_int(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b)

    def a_elements(self) -> frozenset[int]:
        out = set()
        for i, b in enumerate(self.bits):
            if b:
                out.add(i + 1)
                out.add(self.n - 1 - i)
        return frozenset(out)

    def to_coloring(self) -> Coloring:
        return Coloring(CyclicGroup(self.n), self.a_elements())

    @classmethod
    def from_coloring(cls, coloring: Coloring) -> "PairClassMask":
        g = coloring.group
        if not isinstance(g, CyclicGroup):
            raise ValueError("masks only encode cyclic-group colorings")
        for x in coloring.a_set:
            if g.neg(x) not in coloring.a_set:
                raise ValueError("coloring is not symmetric, cannot encode as mask")
        return cls(g.n, tuple(i + 1 in coloring.a_set for i in range(g.n // 2)))


def _check_range(n: int, limit: int) -> None:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > limit:
        raise ValueError(f"n={n} exceeds the exhaustive limit {limit}")
    if limit > kernels.MAX_N:
        raise ValueError(f"exhaustive limit cannot exceed {kernels.MAX_N}")


def exists(algebra: Algebra, n: int, limit: int = DEFAULT_LIMIT) -> bool:
    """Whether some coloring of Z/n represents the algebra (exhaustive)."""
    _check_range(n, limit)
    return kernels.exists_valid(n, mandatory_mask(algebra))


def find_all(
    algebra: Algebra,
    n: int,
    up_to_automorphism: bool = False,
    limit: int = DEFAULT_LIMIT,
) -> list[Coloring]:
    """All representing colorings of Z/n in ascending mask order.

    With up_to_automorphism, only canonical orbit representatives under
    the unit-multiplication action are kept.
    """
    masks = find_all_masks(algebra, n, up_to_automorphism, limit)
    return [PairClassMask.from_int(n, v).to_coloring() for v in masks]


def find_all_masks(
    algebra: Algebra,
    n: int,
    up_to_automorphism: bool = False,
    limit: int = DEFAULT_LIMIT,
) -> list[int]:
    """Mask-level view of find_all."""
    _check_range(n, limit)
    masks = [int(v) for v in kernels.all_valid_masks(n, mandatory_mask(algebra))]
    if up_to_automorphism:
        masks = [v for v in masks if _canonical_int(n, v) == v]
    return masks


def _apply_unit(n: int, mask_int: int, u: int) -> int:
    """Image of a mask under x -> u*x, in the same bit encoding."""
    m = n // 2
    out = 0
    for i in range(m):
        if (mask_int >> i) & 1:
            x = (u * (i + 1)) % n
            cls = min(x, n - x)
            out |= 1 << (cls - 1)
    return out


def _canonical_int(n: int, mask_int: int) -> int:
    return min(_apply_unit(n, mask_int, u) for u in units(n))


def canonical_form(mask: PairClassMask) -> PairClassMask:
    """Minimum of the mask's orbit under unit multiplication, as an int encoding."""
    return PairClassMask.from_int(mask.n, _canonical_int(mask.n, mask.to_int()))


def spectrum(algebra: Algebra, lo: int, hi: int, limit: int = DEFAULT_LIMIT) -> list[int]:
    """All n in [lo, hi] admitting a representation, by exhaustive search."""
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    if hi > limit:
        raise ValueError(f"hi={hi} exceeds the exhaustive limit {limit}")
    return [n for n in range(lo, hi + 1) if exists(algebra, n, limit)]


def random_search(algebra: Algebra, n: int, max_iters: int, seed: int):
    """Sample symmetric colorings uniformly; first valid one wins.

    Each pair class is independently a or b with probability 1/2.
    Deterministic for a given seed. Returns a Coloring or NOT_FOUND.
    """
    if n < 1 or n > kernels.MAX_N:
        raise ValueError(f"need 1 <= n <= {kernels.MAX_N}, got {n}")
    if max_iters < 1:
        raise ValueError(f"need max_iters >= 1, got {max_iters}")
    m = n // 2
    if m == 0:
        return NOT_FOUND
    rng = np.random.default_rng(seed)
    mand = mandatory_mask(algebra)
    chunk = 1024
    drawn = 0
    while drawn < max_iters:
        take = min(chunk, max_iters - drawn)
        masks = rng.integers(0, 1 << m, size=take, dtype=np.int64)
        ok = kernels.check_masks(n, mand, masks)
        hits = np.nonzero(ok)[0]
        if hits.size:
            return PairClassMask.from_int(n, int(masks[hits[0]])).to_coloring()
        drawn += take
    return NOT_FOUND


def max_sumfree_size(n: int) -> int:
    """Largest size of a sum-free subset of Z/n (x + x = y counts)."""
    if not 1 <= n <= 25:
        raise ValueError(f"supported range is 1 <= n <= 25, got {n}")
    return kernels.max_sumfree_size(n)
