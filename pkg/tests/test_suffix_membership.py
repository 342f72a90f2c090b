import random

import pytest

from lyndonpoly.suffix_membership import (
    SymbolOrder,
    build_suffix_tree,
    is_lyndon_suffix_tree,
    membership,
    min_word,
    prune_min_length,
    suffix_order,
)
from lyndonpoly.words import ContractError, all_words, is_lyndon_naive

S = 2  # sentinel for binary words


def T(s):
    return tuple(S if c == '$' else int(c) for c in s)


def fmt(w):
    return ''.join('$' if c == S else str(c) for c in w)


FIG3 = T('1010110$')


def all_suffixes(text):
    return sorted(text[i:] for i in range(len(text)))


class TestBuild:
    def test_figure3_leaves(self):
        tree = build_suffix_tree(FIG3, S)
        assert sorted(tree.suffixes()) == sorted(map(T, [
            '1010110$', '010110$', '10110$', '0110$', '110$', '10$', '0$', '$']))
        assert sorted(tree.leaves()) == list(range(8))

    def test_tiny(self):
        assert sorted(build_suffix_tree(T('0$'), S).suffixes()) == [T('0$'), T('$')]
        assert sorted(build_suffix_tree(T('00$'), S).suffixes()) == [T('00$'), T('0$'), T('$')]

    @pytest.mark.parametrize('text', [T('0101'), T('01$1$'), ()])
    def test_sentinel_rules(self, text):
        with pytest.raises(ContractError):
            build_suffix_tree(text, S)

    def test_random_texts(self):
        rng = random.Random(7)
        for _ in range(300):
            q = rng.randint(1, 4)
            body = tuple(rng.randrange(q) for _ in range(rng.randint(0, 60)))
            tree = build_suffix_tree(body + (q,), q)
            assert sorted(tree.suffixes()) == all_suffixes(body + (q,))
            # no two edges out of a node share their first symbol
            stack = [tree.root]
            while stack:
                node = stack.pop()
                for sym, child in node.children.items():
                    assert tree.text[child.start] == sym
                    stack.append(child)


class TestPrune:
    def test_figure3(self):
        tree = prune_min_length(build_suffix_tree(FIG3, S), 4)
        assert sorted(map(fmt, tree.suffixes())) == sorted(
            ['1010110$', '010110$', '10110$', '0110$', '110$'])

    def test_edges(self):
        tree = build_suffix_tree(FIG3, S)
        assert sorted(prune_min_length(tree, 1).suffixes()) == sorted(tree.suffixes())
        assert prune_min_length(tree, 9).is_empty()

    def test_soundness(self):
        rng = random.Random(11)
        for _ in range(100):
            body = tuple(rng.randrange(3) for _ in range(rng.randint(1, 30)))
            text = body + (3,)
            tree = build_suffix_tree(text, 3)
            m = rng.randint(1, len(text))
            kept = prune_min_length(tree, m).suffixes()
            assert all(len(w) >= m for w in kept)
            assert len(kept) == len(text) - m + 1


class TestMin:
    def test_figure3_orders(self):
        tree = build_suffix_tree(FIG3, S)
        assert fmt(min_word(tree, SymbolOrder((1, 0, S)))) == '110$'
        assert fmt(min_word(tree, SymbolOrder((0, 1, S)))) == '010110$'
        assert fmt(min_word(build_suffix_tree(T('0$'), S), SymbolOrder.sentinel_first(2))) == '$'

    def test_empty_tree(self):
        tree = prune_min_length(build_suffix_tree(T('0$'), S), 5)
        with pytest.raises(ContractError):
            min_word(tree, SymbolOrder.sentinel_first(2))

    def test_suffix_order_listing(self):
        tree = build_suffix_tree(FIG3, S)
        got = [fmt(w) for w in suffix_order(tree, SymbolOrder((0, 1, S)))]
        assert got == ['010110$', '0110$', '0$', '1010110$', '10110$', '10$', '110$', '$']

    def test_bad_order(self):
        with pytest.raises(ContractError):
            SymbolOrder((0, 0, 1))


class TestMembership:
    def test_examples(self):
        assert is_lyndon_suffix_tree(T('001011'), 6, 2)
        assert not is_lyndon_suffix_tree(T('010101'), 6, 2)
        assert not is_lyndon_suffix_tree(T('100110'), 6, 2)

    def test_length_mismatch(self):
        with pytest.raises(ContractError):
            is_lyndon_suffix_tree(T('0011'), 5, 2)

    def test_binary_exhaustive(self):
        for n in range(1, 11):
            for w in all_words(n, 2):
                assert is_lyndon_suffix_tree(w, n, 2) == is_lyndon_naive(w)

    def test_random_larger_alphabets(self):
        rng = random.Random(5)
        for _ in range(1000):
            q = rng.randint(2, 6)
            n = rng.randint(1, 40)
            w = tuple(rng.randrange(q) for _ in range(n))
            assert is_lyndon_suffix_tree(w, n, q) == is_lyndon_naive(w)

    def test_minimum_is_doubled_word_for_lyndon(self):
        res = membership(T('001011'), 6, 2)
        assert res.minimum == T('001011001011$')

    def test_cost_linear(self):
        rng = random.Random(9)
        worst = 0.0
        for n in [8, 32, 128, 512]:
            for _ in range(20):
                w = tuple(rng.randrange(2) for _ in range(n))
                worst = max(worst, membership(w, n, 2).visits / n)
            for w in [(0,) * (n - 1) + (1,), (0, 1) * (n // 2), (0,) * n]:
                worst = max(worst, membership(w, n, 2).visits / n)
        assert worst <= 16
