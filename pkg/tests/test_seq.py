import pytest
from hypothesis import given

from conftest import finite_words, periodic_words, words
from maxgdelta import oracles
from maxgdelta.errors import InputError
from maxgdelta.seq import (
    OMEGA,
    Seq,
    SeqStream,
    all_finite_seqs,
    comparable,
    component_index,
    finite,
    has_upper_bound,
    periodic,
    substring_leq,
)


class TestCanonicalForm:
    def test_primitive_cycle(self):
        assert periodic((), (2, 4, 2, 4)) == periodic((), (2, 4))
        assert periodic((), (5, 5, 5)).cycle == (5,)

    def test_preamble_absorbed_into_cycle(self):
        assert periodic((1, 2), (1, 2)) == periodic((), (1, 2))
        assert periodic((1,), (1,)) == periodic((), (1,))
        assert str(periodic((3,), (2,))) == "[3|2]"

    def test_distinct_encodings_compare_equal(self):
        # 1 2 2 2 ... three ways
        forms = [periodic((1,), (2,)), periodic((1, 2), (2,)), periodic((1, 2, 2), (2, 2))]
        assert len(set(forms)) == 1

    @given(periodic_words)
    def test_canonical_is_idempotent(self, a):
        assert Seq(a.head, a.cycle) == a

    @given(periodic_words)
    def test_canonical_preserves_entries(self, a):
        raw_head = a.head + a.cycle * 3
        for k in range(1, len(raw_head) + 1):
            assert a.at(k) == raw_head[k - 1]

    @given(periodic_words)
    def test_canonical_shape(self, a):
        # primitive cycle, and the head cannot be absorbed further
        assert Seq((), a.cycle).cycle == a.cycle
        if a.head:
            assert a.head[-1] != a.cycle[-1]

    def test_entries_validated(self):
        with pytest.raises(InputError):
            finite(0)
        with pytest.raises(InputError):
            periodic((1,), (0,))
        with pytest.raises(InputError):
            finite()


class TestLengthAndIndex:
    def test_length_examples(self):
        assert finite(1, 2, 3).length() == 3
        assert finite(5).length() == 1
        assert periodic((3,), (2, 4)).length() is OMEGA

    def test_ascending_stream_has_no_finite_length(self):
        # the strictly ascending word exists only as a stream view
        st = SeqStream(lambda k: k)
        assert st.prefix(6) == finite(1, 2, 3, 4, 5, 6)
        assert st.prefix(6).length() == 6

    def test_index_examples(self):
        assert finite(1, 5, 7, 11).at(4) == 11
        assert periodic((3,), (2,)).at(100) == 2
        assert finite(9).at(1) == 9

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            finite(1, 2).at(3)
        with pytest.raises(IndexError):
            finite(1).at(0)

    def test_omega_is_the_top_length(self):
        assert OMEGA == OMEGA and OMEGA <= OMEGA
        for n in (1, 7, 10**9):
            assert n < OMEGA and n <= OMEGA
            assert OMEGA > n and OMEGA >= n
            assert not OMEGA <= n and not OMEGA == n


class TestSubstringOrder:
    def test_prefix_examples(self):
        assert substring_leq(finite(1, 5, 7, 11), finite(1, 5, 7, 11, 11))
        assert not substring_leq(finite(1, 2), finite(2, 1, 1, 1))
        a = periodic((1,), (2,))
        assert substring_leq(a, a)

    def test_infinite_below_needs_equality(self):
        a = periodic((), (1, 2))
        b = periodic((1, 2), (1, 2))  # same word
        c = periodic((), (2, 1))
        assert substring_leq(a, b)
        assert not substring_leq(a, c)
        assert not substring_leq(a, finite(1, 2, 1, 2))

    def test_comparable_differs_at_position_four(self):
        a, b = finite(1, 5, 7, 11), finite(1, 5, 7, 111)
        # oracle: entrywise re-check of the definition, both directions
        assert not oracles.prefix_leq_bruteforce(a, b)
        assert not oracles.prefix_leq_bruteforce(b, a)
        assert not comparable(a, b)

    def test_comparable_examples(self):
        assert comparable(finite(1), finite(1, 7))
        assert not comparable(finite(1, 2), finite(2, 1))

    @given(words, words)
    def test_substring_matches_bruteforce(self, a, b):
        assert substring_leq(a, b) == oracles.prefix_leq_bruteforce(a, b)

    @given(words)
    def test_reflexive(self, a):
        assert substring_leq(a, a)

    @given(words, words)
    def test_antisymmetric(self, a, b):
        if substring_leq(a, b) and substring_leq(b, a):
            assert a == b

    @given(words, words, words)
    def test_transitive(self, a, b, c):
        if substring_leq(a, b) and substring_leq(b, c):
            assert substring_leq(a, c)

    @given(words, words)
    def test_order_preserves_component(self, a, b):
        if substring_leq(a, b):
            assert component_index(a) == component_index(b)

    def test_component_examples(self):
        assert component_index(finite(4, 1)) == 4
        assert component_index(finite(1, 5, 7, 11)) == 1


class TestUpperBounds:
    def test_same_first_two_entries_no_bound(self):
        a, b = finite(1, 2, 1), finite(1, 2, 3)
        # oracle: exhaustive search for a common extension up to length 5
        assert not oracles.seq_upper_bound_bruteforce(a, b, max_entry=4, max_len=5)
        assert not has_upper_bound(a, b)

    def test_examples(self):
        assert has_upper_bound(finite(1), finite(1, 2, 3))
        assert not has_upper_bound(finite(1, 2), finite(2, 1))

    def test_bounded_iff_comparable_exhaustive(self):
        box = list(all_finite_seqs(3, 3))
        for a in box:
            for b in box:
                assert has_upper_bound(a, b) == comparable(a, b)

    def test_bounded_matches_bruteforce_small(self):
        box = list(all_finite_seqs(2, 3))
        for a in box:
            for b in box:
                # extensions one entry past the pair suffice at this scale
                assert has_upper_bound(a, b) == oracles.seq_upper_bound_bruteforce(
                    a, b, max_entry=2, max_len=4
                )

    @given(words, words)
    def test_bounded_iff_comparable(self, a, b):
        assert has_upper_bound(a, b) == comparable(a, b)


class TestCompactsAndPrefixSups:
    @given(periodic_words)
    def test_infinite_word_bounds_its_prefixes(self, a):
        for k in range(1, 8):
            assert substring_leq(a.prefix(k), a)

    @given(periodic_words)
    def test_no_prefix_dominates_the_word(self, a):
        assert not any(substring_leq(a, a.prefix(k)) for k in range(1, 8))

    @given(periodic_words, periodic_words)
    def test_above_all_prefixes_means_above(self, a, b):
        window = max(len(a.head), len(b.head)) + len(a.cycle) * len(b.cycle)
        if all(substring_leq(a.prefix(k), b) for k in range(1, window + 1)):
            assert substring_leq(a, b)

    @given(finite_words, periodic_words)
    def test_finite_words_are_compact_on_prefix_chains(self, a, target):
        # chain: prefixes of target, sup: target itself
        if substring_leq(a, target):
            k = a.length()
            assert substring_leq(a, target.prefix(k))


class TestStream:
    def test_memoizes_and_validates(self):
        calls = []

        def fn(k):
            calls.append(k)
            return k

        st = SeqStream(fn)
        assert st.at(3) == 3
        assert st.at(3) == 3
        assert calls == [1, 2, 3]

    def test_rejects_bad_entries(self):
        st = SeqStream(lambda k: k - 1)
        with pytest.raises(InputError):
            st.at(1)
