"""Union bound for random colorings and the sum-free size lemma.

For a uniformly random symmetric coloring of Z/n, the probability that
some element has an unmet need is at most 3(n-1)(3/4)^((n-2)/2). Once
that bound drops below 1 a valid coloring must exist. The drop is decided
exactly: p < 1 iff 9(n-1)^2 * 3^(n-2) < 4^(n-2), an integer comparison
that sidesteps both floating point and the half-integer exponent at odd n
(both sides of the original inequality are positive, so squaring is safe).
"""

from __future__ import annotations

from dataclasses import dataclass

from .search import max_sumfree_size


@dataclass(frozen=True)
class BoundReport:
    n: int
    p_value: float
    below_one: bool


def union_bound(n: int) -> BoundReport:
    """Bound report for Z/n; below_one uses exact integers only."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    p_value = 3.0 * (n - 1) * 0.75 ** ((n - 2) / 2)
    below_one = 9 * (n - 1) ** 2 * 3 ** (n - 2) < 4 ** (n - 2)
    return BoundReport(n=n, p_value=p_value, below_one=below_one)


def union_bound_threshold() -> int:
    """Least n >= 3 where the bound drops below 1."""
    n = 3
    while not union_bound(n).below_one:
        n += 1
    return n


def check_sumfree_lemma(n: int) -> bool:
    """Whether no sum-free subset of Z/n exceeds n/2 elements, n odd <= 25.

    The search module finds the true maximum by pruned DFS; this checks it
    against the n/2 ceiling that the odd-order argument promises.
    """
    if n % 2 == 0:
        raise ValueError(f"need odd n, got {n}")
    if not 3 <= n <= 25:
        raise ValueError(f"need 3 <= n <= 25, got {n}")
    return max_sumfree_size(n) <= n // 2
