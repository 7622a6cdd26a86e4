"""Exception types shared across the package."""


class IsowordError(Exception):
    """Base class for every error raised by this package."""


class UnknownSymbol(IsowordError):
    """A character of the input text is not part of the declared alphabet."""

    def __init__(self, position: int, character: str):
        super().__init__(
            f"symbol {character!r} at position {position} is not in the alphabet"
        )
        self.position = position
        self.character = character


class LengthMismatch(IsowordError):
    """Two words that must have equal length do not."""


class CodeOutOfRange(IsowordError):
    """A symbol code is not in [0, d)."""


class EmptyWord(IsowordError):
    """The operation requires a non-empty word."""


class PositionOutOfRange(IsowordError):
    """A suffix position lies outside [0, n]."""


class IndexMismatch(IsowordError):
    """The supplied LCE index was built over a different word."""


class UnsupportedAlphabetSize(IsowordError):
    """No Lee-isometricity criterion is available for this alphabet size."""


class BudgetExceeded(IsowordError):
    """The requested cube has more vertices than the configured budget."""


class NotFFree(IsowordError):
    """A word that must avoid the forbidden factor contains it."""
