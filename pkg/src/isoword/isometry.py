"""Top-level isometricity decisions.

A word is Hamming-isometric exactly when it has no 2-error border, for any
constant-size alphabet.  Lee-isometricity coincides with Hamming-isometricity
on alphabets of at most three symbols; on four symbols it is equivalent to
having no 2-Lee-error border.  No criterion is known for five or more
symbols, so that case is refused rather than silently brute-forced (the cube
oracle is available explicitly for exhaustive checks).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .borders import BorderEntry, _walk_hamming, _walk_lee
from .errors import CodeOutOfRange, EmptyWord, UnsupportedAlphabetSize
from .lce import build_index
from .words import HAMMING, LEE, Word

DISTANCE = 2  # prefix/suffix distance that witnesses non-isometricity


@dataclass(frozen=True)
class IsometryVerdict:
    """Decision plus, when negative, the longest witness border."""

    isometric: bool
    metric: str  # HAMMING or LEE
    witness: BorderEntry | None


def is_hamming_isometric(f: Word) -> IsometryVerdict:
    """Decide Hamming-isometricity of a non-empty word in linear time."""
    if len(f) == 0:
        raise EmptyWord("isometricity is decided for non-empty words only")
    index = build_index(f)
    hit, _ = _kernels.scan_hamming(
        index.rank, index.lcp, index.block_mins, index.log2_table, len(f), DISTANCE
    )
    if hit < 0:
        return IsometryVerdict(True, HAMMING, None)
    ok, positions, _, _ = _walk_hamming(index, hit, DISTANCE)
    assert ok, "scan hit not reproduced by the alignment walk"
    witness = BorderEntry(len(f) - hit, tuple(positions), DISTANCE)
    return IsometryVerdict(False, HAMMING, witness)


def is_lee_isometric(f: Word, d: int) -> IsometryVerdict:
    """Decide Lee-isometricity over d <= 4 symbols in linear time.

    For d <= 3 this is the Hamming verdict relabeled (distinct letters on a
    cycle of at most three are always at Lee distance 1, so the witness is
    valid under both metrics).  d >= 5 raises UnsupportedAlphabetSize.
    """
    if len(f) == 0:
        raise EmptyWord("isometricity is decided for non-empty words only")
    if d >= 5:
        raise UnsupportedAlphabetSize(
            f"no Lee-isometricity criterion for alphabets of size {d} (max 4)"
        )
    if d < 1:
        raise CodeOutOfRange(f"alphabet size must be positive, got {d}")
    if f.codes and max(f.codes) >= d:
        raise CodeOutOfRange(f"code {max(f.codes)} not in [0, {d})")
    if d <= 3:
        verdict = is_hamming_isometric(f)
        return IsometryVerdict(verdict.isometric, LEE, verdict.witness)
    index = build_index(f)
    hit, _ = _kernels.scan_lee(
        index.codes_i32,
        index.rank,
        index.lcp,
        index.block_mins,
        index.log2_table,
        len(f),
        DISTANCE,
        d,
    )
    if hit < 0:
        return IsometryVerdict(True, LEE, None)
    ok, positions, _, _ = _walk_lee(index, hit, DISTANCE, d)
    assert ok, "scan hit not reproduced by the alignment walk"
    witness = BorderEntry(len(f) - hit, tuple(positions), DISTANCE)
    return IsometryVerdict(False, LEE, witness)
