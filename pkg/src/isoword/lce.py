"""Constant-time longest-common-extension queries over one fixed word.

The index is a suffix array (numpy prefix doubling with early exit once all
ranks are distinct), its inverse rank array, the adjacent-suffix LCP array
(Kasai), and a range-minimum structure over the LCP array.  The RMQ is a
sparse table over fixed-size block minima with direct scans of the boundary
blocks: constant query time for the fixed block width, O(n + (n/B) log(n/B))
space instead of the O(n log n) of a plain sparse table.

An LceIndex answers queries about suffixes of the one word it was built
over; the border detectors need exactly that (the prefix is the suffix at
position 0).  Positions may equal n and denote the empty suffix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels import BLOCK
from .errors import EmptyWord, PositionOutOfRange
from .words import Word


@dataclass(frozen=True, eq=False)
class LceIndex:
    """Immutable suffix-array index over one word; safe for concurrent reads."""

    word: Word
    suffix_array: np.ndarray  # int32 permutation of [0, n), lexicographic
    rank: np.ndarray  # int32 inverse of suffix_array
    lcp: np.ndarray  # int32, length n-1; lcp[t] joins ranks t and t+1
    block_mins: np.ndarray  # int32 sparse table over BLOCK-wide lcp minima
    log2_table: np.ndarray  # int32 floor(log2) lookup for block counts
    codes_i32: np.ndarray  # int32 copy of the word's codes, for the kernels

    @property
    def n(self) -> int:
        return len(self.word)


def _suffix_array_doubling(codes: np.ndarray) -> np.ndarray:
    """Prefix-doubling suffix sort; past-the-end ranks as 0 sort lowest."""
    n = codes.size
    # compress codes to dense ranks so the combined key base n+2 is valid
    order = np.argsort(codes)
    first_key = codes[order].astype(np.int64)
    rank = np.empty(n, np.int64)
    rank[order] = np.cumsum(np.r_[0, (np.diff(first_key) > 0).astype(np.int64)])
    if int(rank[order[-1]]) == n - 1:
        return order.astype(np.int32)
    k = 1
    while True:
        second = np.zeros(n, np.int64)
        second[: n - k] = rank[k:] + 1
        key = rank * (n + 2) + second
        order = np.argsort(key)
        sorted_key = key[order]
        new_rank = np.empty(n, np.int64)
        new_rank[order] = np.cumsum(
            np.r_[0, (np.diff(sorted_key) > 0).astype(np.int64)]
        )
        rank = new_rank
        if int(rank[order[-1]]) == n - 1:
            return order.astype(np.int32)
        k <<= 1
        # distinct suffix lengths force distinct ranks by k >= n
        assert k < 2 * n, "suffix ranks failed to separate"


def build_index(u: Word) -> LceIndex:
    """Build the LCE index for a non-empty word."""
    n = len(u)
    if n == 0:
        raise EmptyWord("cannot index the empty word")
    codes = np.frombuffer(u.codes, dtype=np.uint8).astype(np.int32)
    sa = _suffix_array_doubling(codes)
    rank = np.empty(n, np.int32)
    rank[sa] = np.arange(n, dtype=np.int32)
    lcp = _kernels.kasai_lcp(codes, sa, rank)

    m = lcp.size
    n_blocks = (m + BLOCK - 1) // BLOCK
    if n_blocks:
        padded = np.full(n_blocks * BLOCK, np.iinfo(np.int32).max, np.int32)
        padded[:m] = lcp
        mins = padded.reshape(n_blocks, BLOCK).min(axis=1)
        levels = max(1, int(n_blocks).bit_length())
        block_mins = np.empty((levels, n_blocks), np.int32)
        block_mins[0] = mins
        for j in range(1, levels):
            span = 1 << j
            width = n_blocks - span + 1
            if width > 0:
                np.minimum(
                    block_mins[j - 1, :width],
                    block_mins[j - 1, span // 2 : span // 2 + width],
                    out=block_mins[j, :width],
                )
    else:
        block_mins = np.zeros((1, 0), np.int32)
    log2_table = np.zeros(n_blocks + 1, np.int32)
    if n_blocks:
        log2_table[1:] = np.frexp(np.arange(1, n_blocks + 1))[1] - 1

    for arr in (sa, rank, lcp, block_mins, log2_table, codes):
        arr.setflags(write=False)
    return LceIndex(u, sa, rank, lcp, block_mins, log2_table, codes)


def lce(index: LceIndex, i: int, j: int) -> int:
    """Length of the longest common prefix of the suffixes at i and j, in O(1)."""
    n = index.n
    if not 0 <= i <= n:
        raise PositionOutOfRange(f"position {i} not in [0, {n}]")
    if not 0 <= j <= n:
        raise PositionOutOfRange(f"position {j} not in [0, {n}]")
    return int(
        _kernels.lce_query(
            index.rank, index.lcp, index.block_mins, index.log2_table, n, i, j
        )
    )


def rmq(index: LceIndex, lo: int, hi: int) -> int:
    """Minimum of lcp[lo..hi] (inclusive), via the block structure."""
    m = index.lcp.size
    if not (0 <= lo <= hi < m):
        raise PositionOutOfRange(f"interval [{lo}, {hi}] not within lcp[0, {m})")
    # Query through the same path the LCE kernel uses: the minimum over
    # lcp[lo..hi] is the LCE of the suffixes ranked lo and hi+1.
    sa = index.suffix_array
    return lce(index, int(sa[lo]), int(sa[hi + 1]))
