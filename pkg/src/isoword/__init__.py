"""isoword: linear-time detection of Hamming- and Lee-isometric words.

A word f is isometric when, at every length, the f-avoiding cube embeds
isometrically in the full cube.  Non-isometricity is equivalent to having a
border at distance exactly 2 (Hamming, any constant alphabet; Lee, alphabets
of at most four symbols), which this package detects with O(1)
longest-common-extension queries in O(n) total time.  An exhaustive
cube-embedding oracle cross-validates the verdicts at small sizes.
"""

from .borders import (
    BorderEntry,
    BorderReport,
    find_k_error_borders,
    find_k_lee_error_borders,
    has_k_error_border,
    has_k_lee_error_border,
    naive_border_scan,
    naive_lee_border_scan,
    scan_query_count,
)
from .cubes import (
    DEFAULT_VERTEX_BUDGET,
    CubeCheckResult,
    CubeWitness,
    check_isometric_embedding,
    enumerate_f_free,
    f_free_transformation_exists,
)
from .errors import (
    BudgetExceeded,
    CodeOutOfRange,
    EmptyWord,
    IndexMismatch,
    IsowordError,
    LengthMismatch,
    NotFFree,
    PositionOutOfRange,
    UnknownSymbol,
    UnsupportedAlphabetSize,
)
from .isometry import IsometryVerdict, is_hamming_isometric, is_lee_isometric
from .lce import LceIndex, build_index, lce, rmq
from .words import (
    HAMMING,
    LEE,
    MAX_ALPHABET_SIZE,
    Alphabet,
    Word,
    hamming_distance,
    lee_distance_letters,
    lee_distance_words,
    make_word,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BorderEntry",
    "BorderReport",
    "BudgetExceeded",
    "CodeOutOfRange",
    "CubeCheckResult",
    "CubeWitness",
    "DEFAULT_VERTEX_BUDGET",
    "EmptyWord",
    "HAMMING",
    "IndexMismatch",
    "IsometryVerdict",
    "IsowordError",
    "LEE",
    "LceIndex",
    "LengthMismatch",
    "MAX_ALPHABET_SIZE",
    "NotFFree",
    "PositionOutOfRange",
    "UnknownSymbol",
    "UnsupportedAlphabetSize",
    "Word",
    "build_index",
    "check_isometric_embedding",
    "enumerate_f_free",
    "f_free_transformation_exists",
    "find_k_error_borders",
    "find_k_lee_error_borders",
    "has_k_error_border",
    "has_k_lee_error_border",
    "hamming_distance",
    "is_hamming_isometric",
    "is_lee_isometric",
    "lce",
    "lee_distance_letters",
    "lee_distance_words",
    "make_word",
    "naive_border_scan",
    "naive_lee_border_scan",
    "rmq",
    "scan_query_count",
]
