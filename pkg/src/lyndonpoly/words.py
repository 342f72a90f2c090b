"""Words over the ordered alphabet {0, ..., q-1} and their compressed form.

A word is a plain tuple of ints. The compressed form stores the word as
alternating blocks of non-maximal symbols and run-lengths of the maximal
symbol q-1::

    v = v0 [q-1]^i1 v1 [q-1]^i2 ... v(t-1) [q-1]^it

The naive predicates in this module (rotation comparison, period check) are
quadratic and serve as oracles for the faster machinery elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence, Union

Word = tuple  # tuple[int, ...]


class ContractError(ValueError):
    """A precondition of an operation was violated by the caller."""


def check_alphabet(q: int) -> int:
    if not isinstance(q, int) or q < 2:
        raise ContractError(f'alphabet size must be an integer >= 2, got {q!r}')
    return q


def make_word(symbols: Sequence[int], q: int) -> Word:
    """Return `symbols` as a word, checking every symbol lies in [0, q)."""
    check_alphabet(q)
    w = tuple(symbols)
    for s in w:
        if not isinstance(s, int) or not 0 <= s < q:
            raise ContractError(f'symbol {s!r} outside alphabet of size {q}')
    return w


def parse_word(text: str, q: int) -> Word:
    """Parse ``'001011'`` or ``'0,0,1,0,1,1'``; commas are required for q > 10."""
    text = text.strip()
    try:
        if ',' in text:
            symbols = [int(tok) for tok in text.split(',')]
        else:
            if q > 10:
                raise ContractError('words over alphabets larger than 10 need commas')
            symbols = [int(ch) for ch in text]
    except ValueError as exc:
        raise ContractError(f'malformed word {text!r}') from exc
    return make_word(symbols, q)


def format_word(w: Sequence[int], q: int = 2) -> str:
    if q <= 10:
        return ''.join(map(str, w))
    return ','.join(map(str, w))


def all_words(n: int, q: int) -> Iterator[Word]:
    """All q**n words of length n in lexicographic order."""
    return product(range(q), repeat=n)


def rotate(w: Sequence[int], i: int) -> Word:
    """R_i(w) = w_i ... w_m w_1 ... w_(i-1), with 1-based i in [1, |w|]."""
    if not 1 <= i <= len(w):
        raise ContractError(f'rotation index {i} outside [1, {len(w)}]')
    w = tuple(w)
    return w[i - 1:] + w[:i - 1]


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Three-way lexicographic comparison; a strict prefix compares less."""
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def is_lyndon_naive(w: Sequence[int]) -> bool:
    """True iff w is strictly smaller than each of its nontrivial rotations."""
    w = tuple(w)
    if not w:
        raise ContractError('the empty word has no rotations')
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def is_aperiodic(w: Sequence[int]) -> bool:
    w = tuple(w)
    if not w:
        raise ContractError('the empty word has no rotations')
    return len({w[i:] + w[:i] for i in range(len(w))}) == len(w)


Block = Word
Item = Union[Block, int]


@dataclass(frozen=True)
class CompressedWord:
    """Compressed representation of a word over an alphabet of size q.

    `items` alternates blocks (tuples of symbols < q-1) and run-lengths of
    q-1, starting with a block. A zero trailing run is absent, so the tuple
    has odd length when the word does not end in q-1. Only the first block
    may be empty, which happens exactly when the word starts with q-1.
    """

    items: tuple
    q: int

    def __post_init__(self):
        check_alphabet(self.q)
        top = self.q - 1
        for k, item in enumerate(self.items):
            if k % 2 == 0:
                if not isinstance(item, tuple):
                    raise ContractError(f'item {k} should be a block, got {item!r}')
                if not item and k > 0:
                    raise ContractError(f'interior block {k // 2} is empty')
                if any(not isinstance(s, int) or not 0 <= s < top for s in item):
                    raise ContractError(f'block {item!r} holds a symbol outside [0, {top})')
            else:
                if not isinstance(item, int) or item < 1:
                    raise ContractError(f'run-length {item!r} must be a positive int')
        if self.items == ((),):
            raise ContractError('empty word is stored as no items')

    @property
    def blocks(self) -> tuple:
        return self.items[0::2]

    @property
    def runs(self) -> tuple:
        return self.items[1::2]

    def __len__(self) -> int:
        return sum(map(len, self.blocks)) + sum(self.runs)

    def __str__(self) -> str:
        return format_word(decompress(self), self.q)


def compress(w: Sequence[int], q: int) -> CompressedWord:
    w = make_word(w, q)
    top = q - 1
    items: list = []
    block: list = []
    run = 0
    for s in w:
        if s == top:
            run += 1
            continue
        if run:
            items.append(tuple(block))
            items.append(run)
            block, run = [], 0
        block.append(s)
    if block or run:
        items.append(tuple(block))
    if run:
        items.append(run)
    return CompressedWord(tuple(items), q)


def decompress(c: CompressedWord) -> Word:
    top = c.q - 1
    out: list = []
    for k, item in enumerate(c.items):
        if k % 2 == 0:
            out.extend(item)
        else:
            out.extend([top] * item)
    return tuple(out)


def compressed_length(c: CompressedWord) -> int:
    """Number of cells of the compressed array: symbols in blocks plus runs."""
    return sum(map(len, c.blocks)) + len(c.runs)
