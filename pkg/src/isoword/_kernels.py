"""Numba-compiled inner loops: Kasai LCP, block-RMQ LCE, kangaroo scans.

Everything here operates on the raw int32 arrays held by an LceIndex; the
wrapping, validation and reporting live in lce.py and borders.py.
"""

import numpy as np
from numba import njit

# Fixed RMQ block width.  Boundary blocks are scanned directly (contiguous,
# cache-friendly); whole blocks in between go through a sparse table over
# block minima.
BLOCK = 32

_I32_MAX = np.int32(np.iinfo(np.int32).max)


@njit(cache=True)
def kasai_lcp(codes, sa, rank):
    """LCP between lexicographically adjacent suffixes, lcp[t] for ranks t, t+1."""
    n = codes.shape[0]
    lcp = np.zeros(max(n - 1, 0), np.int32)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and codes[i + h] == codes[j + h]:
                h += 1
            lcp[r - 1] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


@njit(cache=True)
def lce_query(rank, lcp, block_mins, log2_table, n, i, j):
    """Longest common prefix length of the suffixes at positions i and j.

    Positions equal to n denote the empty suffix.  Bounds are the caller's
    responsibility.
    """
    if i == j:
        return n - i
    if i == n or j == n:
        return 0
    ri = rank[i]
    rj = rank[j]
    if ri > rj:
        ri, rj = rj, ri
    lo = ri
    hi = rj - 1  # inclusive interval over lcp
    bl = lo // BLOCK
    bh = hi // BLOCK
    best = _I32_MAX
    if bl == bh:
        for t in range(lo, hi + 1):
            v = lcp[t]
            if v < best:
                best = v
        return best
    for t in range(lo, (bl + 1) * BLOCK):
        v = lcp[t]
        if v < best:
            best = v
    for t in range(bh * BLOCK, hi + 1):
        v = lcp[t]
        if v < best:
            best = v
    if bh - bl > 1:
        blo = bl + 1
        bhi = bh - 1
        lv = log2_table[bhi - blo + 1]
        a = block_mins[lv, blo]
        b = block_mins[lv, bhi - (1 << lv) + 1]
        m = a if a < b else b
        if m < best:
            best = m
    return best


@njit(cache=True)
def scan_hamming(rank, lcp, block_mins, log2_table, n, k):
    """First alignment i whose border (length n-i) has exactly k mismatches.

    Returns (i, lce_queries); i is -1 when no k-error border exists.  Each
    alignment costs at most k+1 LCE queries.
    """
    queries = 0
    for i in range(1, n):
        l = 0
        d = 0
        while d <= k:
            queries += 1
            l += lce_query(rank, lcp, block_mins, log2_table, n, l, i + l)
            if d == k and l == n - i:
                return i, queries
            if d < k and l < n - i:
                l += 1
                d += 1
            else:
                break
    return -1, queries


@njit(cache=True)
def scan_lee(codes, rank, lcp, block_mins, log2_table, n, k, d_size):
    """Lee analogue of scan_hamming: each mismatch adds the letter Lee distance.

    A single mismatch can add 2 (opposite letters on an even cycle), so the
    accumulated distance may overshoot k; the d > k exit covers that.
    """
    queries = 0
    for i in range(1, n):
        l = 0
        d = 0
        while d <= k:
            queries += 1
            l += lce_query(rank, lcp, block_mins, log2_table, n, l, i + l)
            if d == k and l == n - i:
                return i, queries
            if (d == k and l < n - i) or d > k:
                break
            if d < k and l == n - i:
                break
            diff = codes[l] - codes[i + l]
            if diff < 0:
                diff = -diff
            if d_size - diff < diff:
                diff = d_size - diff
            d += diff
            l += 1
    return -1, queries
