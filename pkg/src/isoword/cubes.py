"""Exhaustive ground truth: d-ary n-cubes restricted to factor-avoiding words.

Vertices are integer ids; reading a word's codes most-significant-first as a
base-d number gives the id, so id order is lexicographic order on words of
one length.  Vertex sets are arbitrary-precision integer bitmasks and the
edge relation is a fixed list of (mask, shift) moves, one per direction of
change at each position: Lee edges change one position by +-1 mod d, Hamming
edges substitute any other letter at one position.  The two edge semantics
are explicit parameters; they genuinely differ for d >= 3.

The embedding check relies on a local criterion equivalent to comparing all
BFS distances: an induced subgraph H of a connected host G preserves every
host distance iff each ordered pair (u, v) in H with d_G(u, v) >= 1 has a
neighbor w of u inside H with d_G(w, v) = d_G(u, v) - 1.  (If distances are
preserved, the first vertex of an H-geodesic is such a w; conversely,
induction on d_G(u, v) rebuilds an H-path of host length.)  Host distances
here are letter-wise, so the one-step-closer targets for a fixed u are
unions of precomputed digit masks and one source costs O(n*d) mask ops.
Witness pairs are recovered afterwards by per-source BFS in id order, which
keeps the reported pair lexicographically first.
"""

from __future__ import annotations

import itertools
import math
import string
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded, CodeOutOfRange, EmptyWord, LengthMismatch, NotFFree
from .words import HAMMING, LEE, Alphabet, Word

DEFAULT_VERTEX_BUDGET = 1 << 22

_SYMBOL_POOL = string.digits + string.ascii_lowercase + string.ascii_uppercase


@dataclass(frozen=True)
class CubeWitness:
    """A vertex pair whose in-subgraph distance exceeds its host distance."""

    u: Word
    v: Word
    host_distance: int
    subgraph_distance: int | float  # math.inf when v is unreachable from u


@dataclass(frozen=True)
class CubeCheckResult:
    isometric: bool
    n: int
    d: int
    metric: str  # HAMMING or LEE
    witness: CubeWitness | None


class _CubeSpace:
    """Digit masks and move tables for one (n, d, metric) cube."""

    def __init__(self, n: int, d: int, metric: str):
        self.n = n
        self.d = d
        self.metric = metric
        self.size = d**n
        self.full = (1 << self.size) - 1
        self.steps = [d**e for e in range(n)]
        self._digit_arrays: dict[int, np.ndarray] = {}

        ids = np.arange(self.size, dtype=np.int64)
        masks: list[list[int]] = []
        for e in range(n):
            digits = (ids // self.steps[e]) % d
            row = []
            for c in range(d):
                packed = np.packbits(digits == c, bitorder="little").tobytes()
                row.append(int.from_bytes(packed, "little"))
            masks.append(row)
        self.digit_masks = masks

        plan: list[tuple[int, int]] = []
        if metric == LEE:
            for e in range(n):
                step = self.steps[e]
                top = masks[e][d - 1]
                bot = masks[e][0]
                plan.append((self.full & ~top, step))  # +1, no wrap
                plan.append((top, -(d - 1) * step))  # +1 wraps to 0
                plan.append((self.full & ~bot, -step))  # -1, no wrap
                plan.append((bot, (d - 1) * step))  # -1 wraps to d-1
        else:
            for e in range(n):
                step = self.steps[e]
                for a in range(d):
                    for c in range(d):
                        if c != a:
                            plan.append((masks[e][a], (c - a) * step))
        self._expand_plan = plan

        if metric == LEE:
            # For v with (u_e - v_e) mod d = delta, the letter distance drops
            # by 1 when u_e moves toward v_e along a shortest arc: -1 for
            # delta < d/2, +1 for delta > d/2, either way at delta = d/2.
            minus = []
            plus = []
            mid = []
            for e in range(n):
                minus_row = []
                plus_row = []
                mid_row = []
                for a in range(d):
                    m_union = 0
                    p_union = 0
                    m_mid = 0
                    for delta in range(1, d):
                        target = masks[e][(a - delta) % d]
                        if 2 * delta < d:
                            m_union |= target
                        elif 2 * delta > d:
                            p_union |= target
                        else:
                            m_mid = target
                    minus_row.append(m_union)
                    plus_row.append(p_union)
                    mid_row.append(m_mid)
                minus.append(minus_row)
                plus.append(plus_row)
                mid.append(mid_row)
            self._lee_minus = minus
            self._lee_plus = plus
            self._lee_mid = mid

    # -- vertex helpers -------------------------------------------------

    def digits_of(self, vid: int) -> list[int]:
        """Digit per exponent, least significant first."""
        out = []
        rem = vid
        for _ in range(self.n):
            out.append(rem % self.d)
            rem //= self.d
        return out

    def word_from_id(self, vid: int, alphabet: Alphabet) -> Word:
        digits = self.digits_of(vid)
        return Word(bytes(digits[::-1]), alphabet)

    def id_from_codes(self, codes: bytes) -> int:
        vid = 0
        for c in codes:
            vid = vid * self.d + c
        return vid

    def bit_indices(self, mask: int) -> np.ndarray:
        nbytes = (self.size + 7) // 8
        raw = np.frombuffer(mask.to_bytes(nbytes, "little"), np.uint8)
        return np.nonzero(np.unpackbits(raw, bitorder="little")[: self.size])[0]

    def bool_array(self, mask: int) -> np.ndarray:
        nbytes = (self.size + 7) // 8
        raw = np.frombuffer(mask.to_bytes(nbytes, "little"), np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.size].astype(bool)

    # -- masks and moves ------------------------------------------------

    def free_mask(self, f_codes: bytes) -> int:
        """Bitmask of vertices avoiding f as a factor."""
        m = len(f_codes)
        if m > self.n:
            return self.full
        contains = 0
        for s in range(self.n - m + 1):
            occ = self.full
            for t, c in enumerate(f_codes):
                occ &= self.digit_masks[self.n - 1 - s - t][c]
                if not occ:
                    break
            contains |= occ
        return self.full & ~contains

    def expand(self, mask: int) -> int:
        """Union of the neighbors of every vertex in the mask."""
        out = 0
        for move_mask, delta in self._expand_plan:
            part = mask & move_mask
            if not part:
                continue
            out |= part << delta if delta >= 0 else part >> -delta
        return out & self.full

    def first_violation(self, free: int) -> int | None:
        """First source u (id order) with some v no in-subgraph move approaches."""
        deleted = self.full & ~free
        if not deleted:
            return None
        # If every neighbor of u is free, the one-step-closer unions cover
        # every v except u itself, so u cannot violate: only neighbors of
        # deleted vertices need the full check.
        boundary = self.expand(deleted) & free
        nbytes = (self.size + 7) // 8
        fb = free.to_bytes(nbytes, "little")
        lee = self.metric == LEE
        for u_id in self.bit_indices(boundary):
            u = int(u_id)
            allowed = 0
            rem = u
            for e in range(self.n):
                a = rem % self.d
                rem //= self.d
                step = self.steps[e]
                if lee:
                    pid = u + step if a < self.d - 1 else u - (self.d - 1) * step
                    mid_id = u - step if a > 0 else u + (self.d - 1) * step
                    plus_ok = fb[pid >> 3] >> (pid & 7) & 1
                    minus_ok = fb[mid_id >> 3] >> (mid_id & 7) & 1
                    if minus_ok:
                        allowed |= self._lee_minus[e][a]
                    if plus_ok:
                        allowed |= self._lee_plus[e][a]
                    if (plus_ok or minus_ok) and self._lee_mid[e][a]:
                        allowed |= self._lee_mid[e][a]
                else:
                    base = u - a * step
                    row = self.digit_masks[e]
                    for c in range(self.d):
                        if c == a:
                            continue
                        tid = base + c * step
                        if fb[tid >> 3] >> (tid & 7) & 1:
                            allowed |= row[c]
            bad = free & ~allowed & ~(1 << u)
            if bad:
                return u
        return None

    def bfs_dist(self, source: int, free: int) -> np.ndarray:
        """In-subgraph BFS distances from source; -1 marks unreachable."""
        dist = np.full(self.size, -1, np.int32)
        dist[source] = 0
        visited = 1 << source
        frontier = visited
        level = 0
        while frontier:
            nxt = self.expand(frontier) & free & ~visited
            if not nxt:
                break
            level += 1
            dist[self.bit_indices(nxt)] = level
            visited |= nxt
            frontier = nxt
        return dist

    def _digit_array(self, e: int) -> np.ndarray:
        arr = self._digit_arrays.get(e)
        if arr is None:
            ids = np.arange(self.size, dtype=np.int64)
            arr = ((ids // self.steps[e]) % self.d).astype(np.int32)
            self._digit_arrays[e] = arr
        return arr

    def host_dist(self, source: int) -> np.ndarray:
        """Host metric distance from source to every vertex, letter-wise."""
        digits = self.digits_of(source)
        acc = np.zeros(self.size, np.int32)
        for e in range(self.n):
            delta = (self._digit_array(e) - digits[e]) % self.d
            if self.metric == LEE:
                acc += np.minimum(delta, self.d - delta)
            else:
                acc += (delta != 0).astype(np.int32)
        return acc


@lru_cache(maxsize=8)
def _get_space(n: int, d: int, metric: str) -> _CubeSpace:
    return _CubeSpace(n, d, metric)


def _vertex_alphabet(f: Word, d: int) -> Alphabet:
    if f.alphabet.size == d:
        return f.alphabet
    if d <= len(_SYMBOL_POOL):
        return Alphabet(_SYMBOL_POOL[:d])
    raise ValueError(f"no canonical symbols for alphabet size {d}")


def _validate_cube_args(f: Word, n: int, d: int, metric: str, budget: int) -> None:
    if len(f) == 0:
        raise EmptyWord("the avoided factor must be non-empty")
    if n < 0:
        raise ValueError(f"word length must be non-negative, got {n}")
    if d < 1:
        raise CodeOutOfRange(f"alphabet size must be positive, got {d}")
    if f.codes and max(f.codes) >= d:
        raise CodeOutOfRange(f"factor code {max(f.codes)} not in [0, {d})")
    if metric not in (HAMMING, LEE):
        raise ValueError(f"unknown metric {metric!r}")
    if d**n > budget:
        raise BudgetExceeded(
            f"{d}^{n} = {d**n} vertices exceeds the budget of {budget}"
        )


def enumerate_f_free(
    f: Word, n: int, d: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> list[Word]:
    """All words of length n over d symbols avoiding f, in lexicographic order."""
    _validate_cube_args(f, n, d, HAMMING, budget)
    alphabet = _vertex_alphabet(f, d)
    f_codes = f.codes
    out = []
    for combo in itertools.product(range(d), repeat=n):
        codes = bytes(combo)
        if f_codes in codes:
            continue
        out.append(Word(codes, alphabet))
    return out


def check_isometric_embedding(
    f: Word,
    n: int,
    d: int,
    metric: str = HAMMING,
    budget: int = DEFAULT_VERTEX_BUDGET,
    find_witness: bool = True,
) -> CubeCheckResult:
    """Does the f-avoiding cube preserve every host distance at length n?

    Returns the lexicographically first witness pair on failure, with its
    host distance and in-subgraph distance (math.inf when disconnected).
    find_witness=False skips the witness recovery (the per-source BFS, by
    far the expensive part) and reports the bare verdict; survey sweeps over
    many factors use this.
    """
    _validate_cube_args(f, n, d, metric, budget)
    space = _get_space(n, d, metric)
    free = space.free_mask(f.codes)
    if space.first_violation(free) is None:
        return CubeCheckResult(True, n, d, metric, None)
    if not find_witness:
        return CubeCheckResult(False, n, d, metric, None)
    alphabet = _vertex_alphabet(f, d)
    free_bits = space.bool_array(free)
    for u_id in space.bit_indices(free):
        u = int(u_id)
        dist = space.bfs_dist(u, free)
        host = space.host_dist(u)
        bad = free_bits & (dist != host)
        if bad.any():
            v = int(np.argmax(bad))
            sub = int(dist[v])
            witness = CubeWitness(
                space.word_from_id(u, alphabet),
                space.word_from_id(v, alphabet),
                int(host[v]),
                math.inf if sub < 0 else sub,
            )
            return CubeCheckResult(False, n, d, metric, witness)
    raise AssertionError("local violation not confirmed by BFS distances")


def f_free_transformation_exists(
    u: Word, v: Word, f: Word, metric: str = HAMMING, d: int | None = None
) -> bool:
    """Can u reach v through f-free words along a host-shortest path?

    Hamming steps rewrite one mismatched position directly to v's letter
    (path length = Hamming distance); Lee steps change one position by
    +-1 mod d and must shrink the remaining Lee distance at every step.
    """
    if len(u) != len(v):
        raise LengthMismatch(f"word lengths differ: {len(u)} vs {len(v)}")
    if len(f) == 0:
        raise EmptyWord("the avoided factor must be non-empty")
    if metric not in (HAMMING, LEE):
        raise ValueError(f"unknown metric {metric!r}")
    if d is None:
        d = max(u.alphabet.size, v.alphabet.size)
    for word in (u, v):
        if word.codes and max(word.codes) >= d:
            raise CodeOutOfRange(f"code {max(word.codes)} not in [0, {d})")
    f_codes = f.codes
    if f_codes in u.codes:
        raise NotFFree("the start word contains the avoided factor")
    if f_codes in v.codes:
        raise NotFFree("the target word contains the avoided factor")
    if u.codes == v.codes:
        return True
    if metric == HAMMING:
        return _hamming_transformation(u.codes, v.codes, f_codes)
    return _lee_transformation(u.codes, v.codes, f_codes, d)


def _hamming_transformation(start: bytes, target: bytes, f_codes: bytes) -> bool:
    """Subset-state search over orderings of the mismatched positions."""
    mismatches = [j for j in range(len(start)) if start[j] != target[j]]
    m = len(mismatches)
    goal = (1 << m) - 1
    seen = {0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for state in frontier:
            for t in range(m):
                bit = 1 << t
                if state & bit:
                    continue
                child = state | bit
                if child in seen:
                    continue
                seen.add(child)
                word = bytearray(start)
                sel = child
                while sel:
                    low = sel & -sel
                    pos = mismatches[low.bit_length() - 1]
                    word[pos] = target[pos]
                    sel ^= low
                if f_codes in bytes(word):
                    continue
                if child == goal:
                    return True
                next_frontier.append(child)
        frontier = next_frontier
    return False


def _lee_transformation(start: bytes, target: bytes, f_codes: bytes, d: int) -> bool:
    """BFS over +-1 moves that each shrink the remaining Lee distance."""
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for word in frontier:
            for j in range(len(word)):
                a = word[j]
                b = target[j]
                if a == b:
                    continue
                delta = (a - b) % d
                if 2 * delta < d:
                    moves = (-1,)
                elif 2 * delta > d:
                    moves = (1,)
                else:
                    moves = (-1, 1)
                for sigma in moves:
                    child = word[:j] + bytes(((a + sigma) % d,)) + word[j + 1 :]
                    if child in seen:
                        continue
                    seen.add(child)
                    if child == target:
                        return True
                    if f_codes in child:
                        continue
                    next_frontier.append(child)
        frontier = next_frontier
    return False
