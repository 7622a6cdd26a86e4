import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoword import (
    Alphabet,
    CodeOutOfRange,
    EmptyWord,
    HAMMING,
    LEE,
    IndexMismatch,
    Word,
    build_index,
    find_k_error_borders,
    find_k_lee_error_borders,
    has_k_error_border,
    has_k_lee_error_border,
    hamming_distance,
    lee_distance_words,
    naive_border_scan,
    naive_lee_border_scan,
    scan_query_count,
)
from isoword.borders import _walk_hamming, _walk_lee

from helpers import BINARY, Z4, word, words_up_to

K_RANGE = (0, 1, 2, 3)


class TestPaperFixtures:
    def test_1010011_has_2_error_border(self):
        w = word("1010011")
        assert has_k_error_border(w, 2, build_index(w))

    def test_101011_detected_at_alignment_3(self):
        w = word("101011")
        idx = build_index(w)
        assert has_k_error_border(w, 2, idx)
        # the walk at i=3 sees extensions 0, 0, 1 and accepts length 3
        hit, positions, extensions, queries = _walk_hamming(idx, 3, 2)
        assert hit and extensions == [0, 0, 1] and queries == 3
        report = find_k_error_borders(w, 2, idx)
        assert 3 in report.lengths()

    def test_unary_words_have_no_2_error_border(self):
        for text in ("11", "1111", "111111"):
            w = word(text)
            assert not has_k_error_border(w, 2, build_index(w))

    def test_1100(self):
        w = word("1100")
        assert has_k_error_border(w, 2, build_index(w))

    def test_find_1010011(self):
        w = word("1010011")
        report = find_k_error_borders(w, 2, build_index(w))
        assert report.lengths() == (4, 3)
        by_length = {e.length: e for e in report.borders}
        assert by_length[3].mismatch_positions == (0, 1)

    def test_find_exact_borders_of_unary_word(self):
        w = word("1111")
        report = find_k_error_borders(w, 0, build_index(w))
        assert report.lengths() == (3, 2, 1)
        assert all(e.mismatch_positions == () for e in report.borders)

    def test_short_word_cannot_hold_two_mismatches(self):
        w = word("01")
        assert find_k_error_borders(w, 2, build_index(w)).lengths() == ()

    def test_lee_0301(self):
        w = word("0301", d=4)
        idx = build_index(w)
        assert has_k_lee_error_border(w, 2, 4, idx)
        report = find_k_lee_error_borders(w, 2, 4, idx)
        assert report.lengths() == (2,)
        assert report.borders[0].mismatch_positions == (1,)
        assert find_k_lee_error_borders(w, 1, 4, idx).lengths() == (1,)

    def test_lee_single_letter_border_distance_2(self):
        w = word("02", d=4)
        assert has_k_lee_error_border(w, 2, 4, build_index(w))

    def test_lee_unary(self):
        w = word("0000", d=4)
        idx = build_index(w)
        assert not has_k_lee_error_border(w, 2, 4, idx)
        assert find_k_lee_error_borders(w, 1, 4, idx).lengths() == ()

    def test_naive_scans(self):
        assert naive_border_scan(word("1010011"), 2).lengths() == (4, 3)
        assert naive_border_scan(word("11"), 2).lengths() == ()
        assert naive_border_scan(word("0"), 3).lengths() == ()
        assert naive_lee_border_scan(word("0301", d=4), 2, 4).lengths() == (2,)
        assert naive_lee_border_scan(word("030001", d=4), 2, 4).lengths() == (4, 3, 2)

    def test_naive_lee_k0_is_exact_borders(self):
        w = word("0110", d=4)
        assert naive_lee_border_scan(w, 0, 4).lengths() == naive_border_scan(w, 0).lengths()


class TestErrors:
    def test_empty_word(self):
        w = word("1")
        idx = build_index(w)
        with pytest.raises(EmptyWord):
            naive_border_scan(Word(b"", BINARY), 2)
        with pytest.raises(EmptyWord):
            has_k_error_border(Word(b"", BINARY), 2, idx)

    def test_index_mismatch(self):
        idx = build_index(word("0101"))
        with pytest.raises(IndexMismatch):
            has_k_error_border(word("1010"), 2, idx)

    def test_negative_k(self):
        w = word("0101")
        with pytest.raises(ValueError):
            has_k_error_border(w, -1, build_index(w))

    def test_lee_code_out_of_range(self):
        w = word("0301", d=4)
        with pytest.raises(CodeOutOfRange):
            has_k_lee_error_border(w, 2, 2, build_index(w))


class TestOracleEquivalence:
    def test_hamming_binary(self):
        for u in words_up_to(2, 10):
            idx = build_index(u)
            for k in K_RANGE:
                expected = naive_border_scan(u, k)
                got = find_k_error_borders(u, k, idx)
                assert got == expected, u.text
                assert has_k_error_border(u, k, idx) == bool(expected.borders)

    def test_hamming_ternary(self):
        for u in words_up_to(3, 9):
            idx = build_index(u)
            for k in K_RANGE:
                assert find_k_error_borders(u, k, idx) == naive_border_scan(u, k)

    def test_lee_z4(self):
        for u in words_up_to(4, 5):
            idx = build_index(u)
            for k in K_RANGE:
                expected = naive_lee_border_scan(u, k, 4)
                assert find_k_lee_error_borders(u, k, 4, idx) == expected
                assert has_k_lee_error_border(u, k, 4, idx) == bool(expected.borders)

    def test_lee_larger_alphabets_random(self):
        rng = np.random.default_rng(23)
        pool = "".join(chr(48 + i) for i in range(8))
        for d in (5, 6, 7, 8):
            alphabet = Alphabet(pool[:d])
            for _ in range(150):
                n = int(rng.integers(1, 14))
                u = Word(rng.integers(0, d, n, dtype=np.uint8).tobytes(), alphabet)
                idx = build_index(u)
                for k in K_RANGE:
                    assert find_k_lee_error_borders(u, k, d, idx) == naive_lee_border_scan(u, k, d)

    def test_report_entries_recompute_to_k(self):
        for u in words_up_to(2, 9):
            idx = build_index(u)
            n = len(u)
            for k in K_RANGE:
                for entry in find_k_error_borders(u, k, idx).borders:
                    prefix = Word(u.codes[: entry.length], u.alphabet)
                    suffix = Word(u.codes[n - entry.length :], u.alphabet)
                    assert hamming_distance(prefix, suffix) == k
        for u in words_up_to(4, 5):
            idx = build_index(u)
            n = len(u)
            for k in K_RANGE:
                for entry in find_k_lee_error_borders(u, k, 4, idx).borders:
                    prefix = Word(u.codes[: entry.length], u.alphabet)
                    suffix = Word(u.codes[n - entry.length :], u.alphabet)
                    assert lee_distance_words(prefix, suffix, 4) == k

    def test_binary_lee_coincides_with_hamming(self):
        for u in words_up_to(2, 12):
            idx = build_index(u)
            for k in K_RANGE:
                assert has_k_lee_error_border(u, k, 2, idx) == has_k_error_border(u, k, idx)


class TestInvariances:
    @given(st.lists(st.integers(0, 1), min_size=1, max_size=40))
    @settings(max_examples=300, deadline=None)
    def test_reversal_invariance_hamming(self, bits):
        u = Word(bytes(bits), BINARY)
        r = Word(bytes(bits[::-1]), BINARY)
        for k in K_RANGE:
            assert (
                find_k_error_borders(u, k, build_index(u)).lengths()
                == find_k_error_borders(r, k, build_index(r)).lengths()
            )

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=30))
    @settings(max_examples=200, deadline=None)
    def test_reversal_invariance_lee(self, codes):
        u = Word(bytes(codes), Z4)
        r = Word(bytes(codes[::-1]), Z4)
        for k in K_RANGE:
            assert (
                find_k_lee_error_borders(u, k, 4, build_index(u)).lengths()
                == find_k_lee_error_borders(r, k, 4, build_index(r)).lengths()
            )

    @given(
        st.lists(st.integers(0, 2), min_size=1, max_size=25),
        st.permutations([0, 1, 2]),
    )
    @settings(max_examples=200, deadline=None)
    def test_alphabet_permutation_invariance_hamming(self, codes, perm):
        from helpers import TERNARY

        u = Word(bytes(codes), TERNARY)
        p = Word(bytes(perm[c] for c in codes), TERNARY)
        for k in K_RANGE:
            assert (
                find_k_error_borders(u, k, build_index(u)).lengths()
                == find_k_error_borders(p, k, build_index(p)).lengths()
            )

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=25), st.integers(1, 3),
           st.booleans())
    @settings(max_examples=200, deadline=None)
    def test_lee_rotation_reflection_invariance(self, codes, shift, reflect):
        u = Word(bytes(codes), Z4)
        if reflect:
            mapped = [(4 - c) % 4 for c in codes]
        else:
            mapped = codes
        mapped = [(c + shift) % 4 for c in mapped]
        v = Word(bytes(mapped), Z4)
        for k in K_RANGE:
            assert (
                find_k_lee_error_borders(u, k, 4, build_index(u)).lengths()
                == find_k_lee_error_borders(v, k, 4, build_index(v)).lengths()
            )


class TestQueryBudget:
    def test_per_alignment_budget(self):
        for u in words_up_to(2, 9):
            idx = build_index(u)
            for k in K_RANGE:
                for i in range(1, len(u)):
                    assert _walk_hamming(idx, i, k)[3] <= k + 1
                    assert _walk_lee(idx, i, k, 2)[3] <= k + 1

    def test_total_budget_small(self):
        for u in words_up_to(2, 9):
            idx = build_index(u)
            for k in K_RANGE:
                assert scan_query_count(u, k, idx) <= (k + 1) * (len(u) - 1)
                assert scan_query_count(u, k, idx, LEE, 2) <= (k + 1) * (len(u) - 1)

    def test_total_budget_random_large(self):
        rng = np.random.default_rng(5)
        for n in (1000, 5000):
            u = Word(rng.integers(0, 2, n, dtype=np.uint8).tobytes(), BINARY)
            idx = build_index(u)
            for k in (0, 1, 2, 5):
                assert scan_query_count(u, k, idx, HAMMING) <= (k + 1) * (n - 1)
