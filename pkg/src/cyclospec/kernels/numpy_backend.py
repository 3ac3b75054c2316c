"""Vectorized numpy fallback for the search kernels.

Everything works on int64 bitboards over Z/n (bit e = element e), so n is
capped at 62. A pair-class mask has bit i (0-based) set when the class
{i+1, n-1-i} is colored a. A mask is valid for an algebra when both atoms
are nonempty and the three sum-sets A+A, A+B, B+B equal exactly what the
composition law requires; `mand` is the uint8[4] view of the mandatory
cycle classes indexed by a-count.

Unlike the jitted backend this one cannot prune partial assignments, so
enumeration is a chunked scan over all masks. Results are identical.
"""

from __future__ import annotations

import numpy as np

MAX_N = 62
_CHUNK = 1 << 14


def _boards_valid_vec(n: int, a: np.ndarray, mand) -> np.ndarray:
    """Validity of a batch of a-bitboards. Returns a bool array."""
    full = (1 << n) - 1
    b = (full & ~1) & ~a
    saa = np.zeros_like(a)
    sab = np.zeros_like(a)
    sbb = np.zeros_like(a)
    for v in range(1, n):
        rot_a = ((a << v) | (a >> (n - v))) & full
        rot_b = ((b << v) | (b >> (n - v))) & full
        in_a = -((a >> v) & 1)  # 0 or all-ones
        in_b = -((b >> v) & 1)
        saa |= rot_a & in_a
        sab |= rot_b & in_a
        sbb |= rot_b & in_b
    taa = 1 | (a if mand[3] else 0) | (b if mand[2] else 0)
    tab = (a if mand[2] else 0) | (b if mand[1] else 0)
    tbb = 1 | (a if mand[1] else 0) | (b if mand[0] else 0)
    return (a != 0) & (b != 0) & (saa == taa) & (sab == tab) & (sbb == tbb)


def _expand(n: int, masks: np.ndarray) -> np.ndarray:
    """Pair-class masks to a-bitboards."""
    m = n // 2
    a = np.zeros_like(masks)
    for i in range(m):
        bit = (masks >> i) & 1
        a |= bit << (i + 1)
        a |= bit << (n - 1 - i)
    return a


def check_masks(n: int, mand, masks: np.ndarray) -> np.ndarray:
    """Validity of each mask in `masks` (int64 array), as a bool array."""
    if n < 1 or n > MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {MAX_N}, got {n}")
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if n < 3:
        return np.zeros(masks.shape, dtype=bool)
    return _boards_valid_vec(n, _expand(n, masks), mand)


def valid_mask(n: int, mask: int, mand) -> bool:
    """Scalar convenience wrapper around check_masks."""
    return bool(check_masks(n, mand, np.array([mask], dtype=np.int64))[0])


def all_valid_masks(n: int, mand) -> np.ndarray:
    """All valid masks for Z/n, ascending. Chunked full scan of 2^(n//2)."""
    if n < 1 or n > MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {MAX_N}, got {n}")
    m = n // 2
    if m > 24:
        raise ValueError(f"full enumeration needs n//2 <= 24, got n={n}")
    if m == 0 or n < 3:
        return np.empty(0, dtype=np.int64)
    hits = []
    for lo in range(0, 1 << m, _CHUNK):
        chunk = np.arange(lo, min(lo + _CHUNK, 1 << m), dtype=np.int64)
        ok = _boards_valid_vec(n, _expand(n, chunk), mand)
        if ok.any():
            hits.append(chunk[ok])
    if not hits:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(hits)


def exists_valid(n: int, mand) -> bool:
    """Whether any valid mask exists; scans ascending, stops at the first hit."""
    if n < 1 or n > MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {MAX_N}, got {n}")
    m = n // 2
    if m == 0 or n < 3:
        return False
    for lo in range(0, 1 << m, _CHUNK):
        chunk = np.arange(lo, min(lo + _CHUNK, 1 << m), dtype=np.int64)
        if _boards_valid_vec(n, _expand(n, chunk), mand).any():
            return True
    return False


def max_sumfree_size(n: int) -> int:
    """Largest sum-free subset size in Z/n (x + x counts as a sum).

    Plain branch-and-bound over python int bitboards; the jitted backend
    mirrors this exactly.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n <= 1:
        return 0
    full = (1 << n) - 1
    best = 0

    def dfs(e: int, sb: int, ss: int, size: int) -> None:
        nonlocal best
        if e == n:
            if size > best:
                best = size
            return
        if size + (n - e) <= best:
            return
        if ((ss >> e) & 1) == 0:
            s2 = sb | (1 << e)
            news = ((s2 << e) | (s2 >> (n - e))) & full
            if (news & s2) == 0:
                dfs(e + 1, s2, ss | news, size + 1)
        dfs(e + 1, sb, ss, size)

    dfs(1, 0, 0, 0)
    return best
