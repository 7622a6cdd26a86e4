"""Shared pure-Python oracles and generators for the test suite.

Everything here is deliberately naive (sorting suffix lists, dict-based BFS)
so it stays independent of the implementations under test.
"""

from __future__ import annotations

import itertools
from collections import deque

from isoword import Alphabet, Word, make_word

BINARY = Alphabet("01")
TERNARY = Alphabet("012")
Z4 = Alphabet("0123")

_ALPHABETS = {2: BINARY, 3: TERNARY, 4: Z4}


def word(text: str, d: int = 2) -> Word:
    return make_word(text, _ALPHABETS[d])


def all_words(d: int, length: int):
    """Every word of exactly this length over d symbols, lexicographic."""
    alphabet = _ALPHABETS[d]
    for combo in itertools.product(alphabet.symbols, repeat=length):
        yield make_word("".join(combo), alphabet)


def words_up_to(d: int, maxlen: int, minlen: int = 1):
    for length in range(minlen, maxlen + 1):
        yield from all_words(d, length)


def naive_suffix_sort(codes: bytes) -> list[int]:
    return sorted(range(len(codes)), key=lambda i: codes[i:])


def naive_lce(codes: bytes, i: int, j: int) -> int:
    n = len(codes)
    c = 0
    while i + c < n and j + c < n and codes[i + c] == codes[j + c]:
        c += 1
    return c


def lee_letter(a: int, b: int, d: int) -> int:
    diff = abs(a - b)
    return min(diff, d - diff)


def naive_metric_distance(u: bytes, v: bytes, metric: str, d: int) -> int:
    if metric == "lee":
        return sum(lee_letter(a, b, d) for a, b in zip(u, v))
    return sum(a != b for a, b in zip(u, v))


def naive_neighbors(codes: bytes, metric: str, d: int) -> list[bytes]:
    """Single-position moves: +-1 mod d for lee, any substitution for hamming."""
    out = []
    for j in range(len(codes)):
        a = codes[j]
        if metric == "lee":
            targets = {(a + 1) % d, (a - 1) % d}
            targets.discard(a)  # d == 1 degenerates to a self-loop
        else:
            targets = set(range(d)) - {a}
        for c in sorted(targets):
            out.append(codes[:j] + bytes((c,)) + codes[j + 1 :])
    return out


def naive_cube_check(f: Word, n: int, d: int, metric: str):
    """Reference embedding check: explicit adjacency dict, BFS from every vertex.

    Returns (isometric, witness) with witness = (u_codes, v_codes, host, sub)
    for the lexicographically first failing pair; sub is None when unreachable.
    """
    vertices = [
        bytes(combo)
        for combo in itertools.product(range(d), repeat=n)
        if f.codes not in bytes(combo)
    ]
    vset = set(vertices)
    adjacency = {
        u: [w for w in naive_neighbors(u, metric, d) if w in vset] for u in vertices
    }
    for u in vertices:  # lexicographic source order
        dist = {u: 0}
        queue = deque([u])
        while queue:
            cur = queue.popleft()
            for nxt in adjacency[cur]:
                if nxt not in dist:
                    dist[nxt] = dist[cur] + 1
                    queue.append(nxt)
        for v in vertices:  # lexicographic partner order
            host = naive_metric_distance(u, v, metric, d)
            sub = dist.get(v)
            if sub != host:
                return False, (u, v, host, sub)
    return True, None
