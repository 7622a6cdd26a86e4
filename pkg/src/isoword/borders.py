"""Detectors for k-error and k-Lee-error borders, plus quadratic oracles.

A border of length L pairs the prefix u[0..L) with the suffix u[n-L..n).
The fast detectors check one alignment i (border length n-i) at a time by
jumping from mismatch to mismatch with O(1) LCE queries, at most k+1 queries
per alignment, so a full scan costs at most (k+1)(n-1) queries.  Alignments
are visited for i = 1..n-1, i.e. border lengths strictly decreasing; the
boolean detectors stop at the first hit, which is therefore the longest
qualifying border.

The naive scans recompute every prefix/suffix distance directly in O(n^2)
and exist as the testing oracle for the detectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import CodeOutOfRange, EmptyWord, IndexMismatch
from .lce import LceIndex, lce
from .words import HAMMING, LEE, Word, lee_distance_letters


@dataclass(frozen=True)
class BorderEntry:
    """One border at the target distance.

    mismatch_positions are the prefix-side positions p in [0, length) with
    u[p] != u[n-length+p]; for the Lee kind these are the positions with a
    nonzero letter Lee distance, and the letter distances sum to `distance`.
    """

    length: int
    mismatch_positions: tuple[int, ...]
    distance: int


@dataclass(frozen=True)
class BorderReport:
    """Every border at distance exactly k, in decreasing length order."""

    k: int
    kind: str  # HAMMING or LEE
    borders: tuple[BorderEntry, ...]

    def lengths(self) -> tuple[int, ...]:
        return tuple(entry.length for entry in self.borders)


def _check_detector_input(u: Word, k: int, index: LceIndex) -> None:
    if len(u) == 0:
        raise EmptyWord("border detection requires a non-empty word")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if index.word is not u and index.word != u:
        raise IndexMismatch("index was built over a different word")


def _check_lee_codes(u: Word, d: int) -> None:
    if d < 1:
        raise CodeOutOfRange(f"alphabet size must be positive, got {d}")
    if u.codes and max(u.codes) >= d:
        raise CodeOutOfRange(f"code {max(u.codes)} not in [0, {d})")


def has_k_error_border(u: Word, k: int, index: LceIndex) -> bool:
    """True iff some proper border has Hamming distance exactly k."""
    _check_detector_input(u, k, index)
    hit, _ = _kernels.scan_hamming(
        index.rank, index.lcp, index.block_mins, index.log2_table, len(u), k
    )
    return hit >= 0


def has_k_lee_error_border(u: Word, k: int, d: int, index: LceIndex) -> bool:
    """True iff some proper border has Lee distance exactly k over d symbols."""
    _check_detector_input(u, k, index)
    _check_lee_codes(u, d)
    hit, _ = _kernels.scan_lee(
        index.codes_i32,
        index.rank,
        index.lcp,
        index.block_mins,
        index.log2_table,
        len(u),
        k,
        d,
    )
    return hit >= 0


def scan_query_count(
    u: Word, k: int, index: LceIndex, kind: str = HAMMING, d: int | None = None
) -> int:
    """LCE queries used by the first-hit scan; at most (k+1)(n-1)."""
    _check_detector_input(u, k, index)
    if kind == HAMMING:
        _, queries = _kernels.scan_hamming(
            index.rank, index.lcp, index.block_mins, index.log2_table, len(u), k
        )
    elif kind == LEE:
        if d is None:
            raise ValueError("kind 'lee' requires the alphabet size d")
        _check_lee_codes(u, d)
        _, queries = _kernels.scan_lee(
            index.codes_i32,
            index.rank,
            index.lcp,
            index.block_mins,
            index.log2_table,
            len(u),
            k,
            d,
        )
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return int(queries)


def _walk_hamming(index: LceIndex, i: int, k: int):
    """Kangaroo walk of one alignment.

    Returns (hit, mismatch_positions, extensions, queries); extensions is the
    raw LCE value of each query, in order.
    """
    n = index.n
    l = 0
    d = 0
    positions: list[int] = []
    extensions: list[int] = []
    queries = 0
    while True:
        queries += 1
        e = lce(index, l, i + l)
        extensions.append(e)
        l += e
        if d == k and l == n - i:
            return True, positions, extensions, queries
        if d < k and l < n - i:
            positions.append(l)
            l += 1
            d += 1
        else:
            return False, positions, extensions, queries


def _walk_lee(index: LceIndex, i: int, k: int, d_size: int):
    """Lee kangaroo walk of one alignment; mismatches add letter Lee distances."""
    n = index.n
    codes = index.word.codes
    l = 0
    d = 0
    positions: list[int] = []
    extensions: list[int] = []
    queries = 0
    while d <= k:
        queries += 1
        e = lce(index, l, i + l)
        extensions.append(e)
        l += e
        if d == k and l == n - i:
            return True, positions, extensions, queries
        if (d == k and l < n - i) or d > k:
            break
        if d < k and l == n - i:
            break
        d += lee_distance_letters(codes[l], codes[i + l], d_size)
        positions.append(l)
        l += 1
    return False, positions, extensions, queries


def find_k_error_borders(u: Word, k: int, index: LceIndex) -> BorderReport:
    """All borders at Hamming distance exactly k, longest first."""
    _check_detector_input(u, k, index)
    n = len(u)
    entries = []
    for i in range(1, n):
        hit, positions, _, _ = _walk_hamming(index, i, k)
        if hit:
            entries.append(BorderEntry(n - i, tuple(positions), k))
    return BorderReport(k, HAMMING, tuple(entries))


def find_k_lee_error_borders(u: Word, k: int, d: int, index: LceIndex) -> BorderReport:
    """All borders at Lee distance exactly k over d symbols, longest first."""
    _check_detector_input(u, k, index)
    _check_lee_codes(u, d)
    n = len(u)
    entries = []
    for i in range(1, n):
        hit, positions, _, _ = _walk_lee(index, i, k, d)
        if hit:
            entries.append(BorderEntry(n - i, tuple(positions), k))
    return BorderReport(k, LEE, tuple(entries))


def naive_border_scan(u: Word, k: int) -> BorderReport:
    """O(n^2) oracle: compare every suffix with the prefix of the same length."""
    if len(u) == 0:
        raise EmptyWord("border detection requires a non-empty word")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    n = len(u)
    codes = u.codes
    entries = []
    for i in range(1, n):
        length = n - i
        positions = tuple(p for p in range(length) if codes[p] != codes[i + p])
        if len(positions) == k:
            entries.append(BorderEntry(length, positions, k))
    return BorderReport(k, HAMMING, tuple(entries))


def naive_lee_border_scan(u: Word, k: int, d: int) -> BorderReport:
    """O(n^2) Lee oracle: direct letter-distance summation per alignment."""
    if len(u) == 0:
        raise EmptyWord("border detection requires a non-empty word")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    _check_lee_codes(u, d)
    n = len(u)
    codes = u.codes
    entries = []
    for i in range(1, n):
        length = n - i
        positions = []
        total = 0
        for p in range(length):
            step = lee_distance_letters(codes[p], codes[i + p], d)
            if step:
                positions.append(p)
                total += step
        if total == k:
            entries.append(BorderEntry(length, tuple(positions), k))
    return BorderReport(k, LEE, tuple(entries))
