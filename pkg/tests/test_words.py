import random
from functools import cmp_to_key

import pytest
from hypothesis import given, strategies as st

from lyndonpoly.lyndon_enum import count_lyndon, increment_last
from lyndonpoly.words import (
    CompressedWord,
    ContractError,
    all_words,
    compress,
    compressed_length,
    decompress,
    format_word,
    is_aperiodic,
    is_lyndon_naive,
    lex_compare,
    parse_word,
    rotate,
)


def W(s):
    return tuple(int(c) for c in s)


def shift_oracle(w, i):
    # position k of R_i(w) reads w at (k + i - 1) mod |w|
    return tuple(w[(k + i - 1) % len(w)] for k in range(len(w)))


def words(q, min_size=0, max_size=12):
    return st.lists(st.integers(0, q - 1), min_size=min_size, max_size=max_size).map(tuple)


class TestRotate:
    def test_examples(self):
        assert rotate(W('001011'), 3) == W('101100')
        assert rotate(W('001011'), 1) == W('001011')
        assert rotate(W('0222'), 4) == W('2022') == shift_oracle(W('0222'), 4)

    @pytest.mark.parametrize('i', [0, 7, -1])
    def test_out_of_range(self, i):
        with pytest.raises(ContractError):
            rotate(W('001011'), i)

    @given(words(3, min_size=1), st.data())
    def test_matches_index_shift(self, w, data):
        i = data.draw(st.integers(1, len(w)))
        assert rotate(w, i) == shift_oracle(w, i)


class TestLexCompare:
    def test_examples(self):
        assert lex_compare(W('000101'), W('000111')) == -1
        assert lex_compare(W('01'), W('01')) == 0
        assert lex_compare(W('0110'), W('01')) == 1

    def test_agrees_with_exhaustive_sort(self):
        # oracle: sort by (padded word, length) where padding uses a symbol below 0
        pool = [w for m in range(5) for w in all_words(m, 2)]
        by_key = sorted(pool, key=lambda w: tuple(w) + (-1,) * (4 - len(w)))
        assert sorted(pool, key=cmp_to_key(lex_compare)) == by_key

    def test_total_order_on_length_10(self):
        pool = list(all_words(10, 2))
        shuffled = pool[:]
        random.Random(3).shuffle(shuffled)
        assert sorted(shuffled, key=cmp_to_key(lex_compare)) == pool
        for a, b in zip(pool, pool[1:]):
            assert lex_compare(a, b) == -1 and lex_compare(b, a) == 1


class TestLyndonAndPeriod:
    def test_examples(self):
        assert is_lyndon_naive(W('001011'))
        assert not is_lyndon_naive(W('010101'))
        assert not is_lyndon_naive(W('010011'))
        assert is_aperiodic(W('001011'))
        assert not is_aperiodic(W('0101'))

    def test_aperiodic_count(self):
        assert sum(is_aperiodic(w) for w in all_words(4, 2)) == 12 == 4 * count_lyndon(4, 2)

    def test_empty_word(self):
        with pytest.raises(ContractError):
            is_lyndon_naive(())
        with pytest.raises(ContractError):
            is_aperiodic(())

    @pytest.mark.parametrize('q,top', [(2, 12), (3, 8)])
    def test_lyndon_implies_aperiodic_and_count(self, q, top):
        for n in range(1, top + 1):
            lyndon = [w for w in all_words(n, q) if is_lyndon_naive(w)]
            assert all(is_aperiodic(w) for w in lyndon)
            assert len(lyndon) == count_lyndon(n, q)


class TestCompress:
    def test_examples(self):
        assert compress(W('0222022'), 3).items == ((0,), 3, (0,), 2)
        assert compress(W('0011'), 2).items == ((0, 0), 2)
        assert compress(W('012'), 3).items == ((0, 1), 1)

    def test_lengths(self):
        assert compressed_length(compress(W('0222022'), 3)) == 4
        assert compressed_length(compress(W('0011'), 2)) == 3
        c = compress(W('010'), 3)
        assert c.items == ((0, 1, 0),) and compressed_length(c) == 3

    def test_word_starting_with_top_symbol(self):
        c = compress(W('2201'), 3)
        assert c.items == ((), 2, (0, 1))
        assert decompress(c) == W('2201')
        assert compress((), 2).items == ()

    @pytest.mark.parametrize('items', [
        ((0,), 0),            # zero interior run
        ((0,), 2, ()),        # empty interior block
        ((0, 2), 1),          # top symbol inside a block
        (3,),                 # starts with a run
        ((),),                # empty word spelled as an empty block
    ])
    def test_malformed(self, items):
        with pytest.raises(ContractError):
            CompressedWord(items, 3)

    def test_round_trip_exhaustive_binary(self):
        for n in range(13):
            for w in all_words(n, 2):
                assert decompress(compress(w, 2)) == w

    @given(words(3))
    def test_round_trip_ternary(self, w):
        c = compress(w, 3)
        assert decompress(c) == w
        assert len(c) == len(w)

    @given(st.integers(2, 4).flatmap(lambda q: st.tuples(st.just(q), words(q, min_size=1, max_size=20))))
    def test_increment_contracts_compressed_length(self, qw):
        q, v = qw
        if all(s == q - 1 for s in v):
            return
        before = compressed_length(compress(v, q))
        after = compressed_length(compress(increment_last(v, q), q))
        if v[-1] != q - 1:
            assert before - 1 <= after <= before
        else:
            # stripping the trailing run frees one more cell
            assert before - 2 <= after <= before - 1


def test_parse_and_format():
    assert parse_word('001011', 2) == W('001011')
    assert parse_word('0,10,3', 11) == (0, 10, 3)
    assert format_word((0, 10, 3), 11) == '0,10,3'
    with pytest.raises(ContractError):
        parse_word('0120', 2)
    with pytest.raises(ContractError):
        parse_word('0x1', 2)
