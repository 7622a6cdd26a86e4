"""Alphabets, words over dense integer codes, and the Hamming/Lee distances.

Symbols are mapped to codes by their position in a user-declared alphabet
string, so every inner loop works on small integers.  Codes are stored as
bytes: equality, hashing and factor containment come for free, and the
256-symbol cap keeps one code per byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CodeOutOfRange, LengthMismatch, UnknownSymbol

MAX_ALPHABET_SIZE = 256

HAMMING = "hamming"
LEE = "lee"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct symbols; the symbol at position i has code i."""

    symbols: str

    def __post_init__(self):
        if not 1 <= len(self.symbols) <= MAX_ALPHABET_SIZE:
            raise ValueError(
                f"alphabet size must be in [1, {MAX_ALPHABET_SIZE}], "
                f"got {len(self.symbols)}"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Word:
    """An immutable sequence of symbol codes over a fixed alphabet."""

    codes: bytes
    alphabet: Alphabet

    def __post_init__(self):
        if self.codes and max(self.codes) >= self.alphabet.size:
            bad = max(self.codes)
            raise CodeOutOfRange(
                f"code {bad} does not fit an alphabet of size {self.alphabet.size}"
            )

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def length(self) -> int:
        return len(self.codes)

    @property
    def text(self) -> str:
        """The word rendered back through its alphabet."""
        return "".join(self.alphabet.symbols[c] for c in self.codes)


def make_word(text: str, alphabet: Alphabet) -> Word:
    """Map each character of text to its alphabet position.

    Raises UnknownSymbol (with position and character) for any character
    absent from the alphabet.
    """
    table = {ch: i for i, ch in enumerate(alphabet.symbols)}
    out = bytearray(len(text))
    for pos, ch in enumerate(text):
        code = table.get(ch)
        if code is None:
            raise UnknownSymbol(pos, ch)
        out[pos] = code
    return Word(bytes(out), alphabet)


def hamming_distance(u: Word, v: Word) -> int:
    """Number of positions where u and v differ (equal lengths required)."""
    if len(u) != len(v):
        raise LengthMismatch(f"word lengths differ: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u.codes, v.codes))


def lee_distance_letters(a: int, b: int, d: int) -> int:
    """Distance between two letters on the cycle of d symbols: min(|a-b|, d-|a-b|)."""
    if not 0 <= a < d:
        raise CodeOutOfRange(f"code {a} not in [0, {d})")
    if not 0 <= b < d:
        raise CodeOutOfRange(f"code {b} not in [0, {d})")
    diff = abs(a - b)
    return min(diff, d - diff)


def lee_distance_words(u: Word, v: Word, d: int) -> int:
    """Coordinate-wise sum of letter Lee distances over the cycle of d symbols."""
    if len(u) != len(v):
        raise LengthMismatch(f"word lengths differ: {len(u)} vs {len(v)}")
    return sum(lee_distance_letters(a, b, d) for a, b in zip(u.codes, v.codes))
