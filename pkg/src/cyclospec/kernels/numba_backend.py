"""Jitted search kernels: pruned DFS over pair-class masks.

Same contract as numpy_backend (see there for the bitboard conventions).
The enumeration decides pair classes in increasing index order and
discards a partial assignment as soon as a forbidden cycle shows up among
the decided elements; mandatory-need checks run only on complete
assignments, as a sum-set equality over int64 bitboards.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_N = 62


@njit(cache=True)
def _boards_valid(n, a, mand):
    full = (1 << n) - 1
    b = (full & ~1) & ~a
    if a == 0 or b == 0:
        return False
    saa = 0
    sab = 0
    sbb = 0
    for v in range(1, n):
        if (a >> v) & 1:
            saa |= ((a << v) | (a >> (n - v))) & full
            sab |= ((b << v) | (b >> (n - v))) & full
        else:
            sbb |= ((b << v) | (b >> (n - v))) & full
    taa = 1
    if mand[3]:
        taa |= a
    if mand[2]:
        taa |= b
    tab = 0
    if mand[2]:
        tab |= a
    if mand[1]:
        tab |= b
    tbb = 1
    if mand[1]:
        tbb |= a
    if mand[0]:
        tbb |= b
    return saa == taa and sab == tab and sbb == tbb


@njit(cache=True)
def _valid_mask(n, mask, mand):
    m = n // 2
    a = 0
    for i in range(m):
        if (mask >> i) & 1:
            a |= (1 << (i + 1)) | (1 << (n - 1 - i))
    return _boards_valid(n, a, mand)


@njit(cache=True)
def _triple_ok(col, mand, x, y, z):
    return mand[col[x] + col[y] + col[z]] != 0


@njit(cache=True)
def _scan_w(col, n, k, mand, w):
    """Check every triple that involves element w and only decided elements.

    An element e is decided iff min(e, n-e) <= k, i.e. e <= k or e >= n-k.
    """
    hi = n - k
    # w as an operand: z = w + y with y, z decided
    for y in range(1, k + 1):
        z = w + y
        if z >= n:
            z -= n
        if z != 0 and (z <= k or z >= hi):
            if not _triple_ok(col, mand, w, y, z):
                return False
    for y in range(max(hi, k + 1), n):
        z = w + y
        if z >= n:
            z -= n
        if z != 0 and (z <= k or z >= hi):
            if not _triple_ok(col, mand, w, y, z):
                return False
    # w as the result: x + y = w with x, y decided
    for x in range(1, k + 1):
        y = w - x
        if y < 0:
            y += n
        if y != 0 and (y <= k or y >= hi):
            if not _triple_ok(col, mand, x, y, w):
                return False
    for x in range(max(hi, k + 1), n):
        y = w - x
        if y < 0:
            y += n
        if y != 0 and (y <= k or y >= hi):
            if not _triple_ok(col, mand, x, y, w):
                return False
    return True


@njit(cache=True)
def _class_ok(col, n, k, mand):
    """No forbidden cycle among decided elements after deciding class k.

    Only triples involving the newly decided elements k and n-k need
    checking; earlier triples were checked when their own last element was
    decided.
    """
    if not _scan_w(col, n, k, mand, k):
        return False
    if n - k != k and not _scan_w(col, n, k, mand, n - k):
        return False
    return True


@njit(cache=True)
def _leaf_valid(col, n, mand):
    a = 0
    for e in range(1, n):
        if col[e]:
            a |= 1 << e
    return _boards_valid(n, a, mand)


@njit(cache=True)
def _dfs_masks(n, mand, out, stop_first):
    """Pruned DFS over class assignments. Stores valid masks in `out`,
    returns how many were stored (at most 1 when stop_first)."""
    m = n // 2
    cnt = 0
    if m == 0 or n < 3:
        return 0
    col = np.zeros(n, np.uint8)
    bits = np.zeros(m + 2, np.int8)
    k = 1
    bits[1] = 0
    while k >= 1:
        if bits[k] > 1:
            k -= 1
            if k >= 1:
                bits[k] += 1
            continue
        b = bits[k]
        col[k] = b
        col[n - k] = b
        if _class_ok(col, n, k, mand):
            if k == m:
                if _leaf_valid(col, n, mand):
                    mask = 0
                    for i in range(1, m + 1):
                        if col[i]:
                            mask |= 1 << (i - 1)
                    out[cnt] = mask
                    cnt += 1
                    if stop_first:
                        return cnt
                bits[k] += 1
            else:
                k += 1
                bits[k] = 0
        else:
            bits[k] += 1
    return cnt


@njit(cache=True)
def _check_masks(n, mand, masks):
    out = np.zeros(masks.shape[0], np.uint8)
    for i in range(masks.shape[0]):
        if _valid_mask(n, masks[i], mand):
            out[i] = 1
    return out


@njit(cache=True)
def _max_sumfree_size(n):
    full = (1 << n) - 1
    best = 0
    maxd = n + 2
    el = np.zeros(maxd, np.int64)
    sb = np.zeros(maxd, np.int64)
    ss = np.zeros(maxd, np.int64)
    sz = np.zeros(maxd, np.int64)
    ph = np.zeros(maxd, np.int64)
    d = 0
    el[0] = 1
    while d >= 0:
        e = el[d]
        if e == n:
            if sz[d] > best:
                best = sz[d]
            d -= 1
            continue
        if sz[d] + (n - e) <= best:
            d -= 1
            continue
        p = ph[d]
        if p == 0:
            ph[d] = 1
            if ((ss[d] >> e) & 1) == 0:
                s2 = sb[d] | (1 << e)
                news = ((s2 << e) | (s2 >> (n - e))) & full
                if (news & s2) == 0:
                    nd = d + 1
                    el[nd] = e + 1
                    sb[nd] = s2
                    ss[nd] = ss[d] | news
                    sz[nd] = sz[d] + 1
                    ph[nd] = 0
                    d = nd
        elif p == 1:
            ph[d] = 2
            nd = d + 1
            el[nd] = e + 1
            sb[nd] = sb[d]
            ss[nd] = ss[d]
            sz[nd] = sz[d]
            ph[nd] = 0
            d = nd
        else:
            d -= 1
    return best


def _check_n(n: int) -> None:
    if n < 1 or n > MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {MAX_N}, got {n}")


def valid_mask(n: int, mask: int, mand) -> bool:
    _check_n(n)
    if n < 3:
        return False
    return bool(_valid_mask(n, mask, mand))


def check_masks(n: int, mand, masks: np.ndarray) -> np.ndarray:
    _check_n(n)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if n < 3:
        return np.zeros(masks.shape, dtype=bool)
    return _check_masks(n, mand, masks).astype(bool)


def all_valid_masks(n: int, mand) -> np.ndarray:
    _check_n(n)
    m = n // 2
    if m > 24:
        raise ValueError(f"full enumeration needs n//2 <= 24, got n={n}")
    if m == 0 or n < 3:
        return np.empty(0, dtype=np.int64)
    out = np.empty(1 << m, dtype=np.int64)
    cnt = _dfs_masks(n, mand, out, False)
    res = out[:cnt].copy()
    res.sort()
    return res


def exists_valid(n: int, mand) -> bool:
    _check_n(n)
    if n // 2 == 0 or n < 3:
        return False
    out = np.empty(1, dtype=np.int64)
    return _dfs_masks(n, mand, out, True) > 0


def max_sumfree_size(n: int) -> int:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n <= 1:
        return 0
    return int(_max_sumfree_size(n))
