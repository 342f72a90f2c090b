"""Lyndon words of exact length n with linear delay.

Duval's successor N(w) = P(D(w)) walks through every Lyndon word of length
at most n. Between two words of length exactly n it may pass through many
shorter words, and on the plain array representation the copies made by D
cost quadratic time (``0 1^k 0 1^(k+1)`` is the classic bad case). Keeping
the word as an array of cells where each run of the maximal symbol occupies
a single cell makes every intermediate step cost at most its length gain
plus one, so the next word of length n arrives after O(n) cell writes.

Cost model: an *update* is one write to a cell of the compressed array
(symbol write, run-counter write, cell removal or cell merge). Reads and
index arithmetic are free.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .words import (
    CompressedWord,
    ContractError,
    Word,
    check_alphabet,
    is_lyndon_naive,
    make_word,
)


class Exhausted(Exception):
    """No successor exists: the word consists of the maximal symbol only."""


def duval_extend(w: Sequence[int], n: int) -> Word:
    """D(w): repeat w and cut the result at length n."""
    w = tuple(w)
    if not w or len(w) > n:
        raise ContractError(f'need 1 <= |w| <= n, got |w|={len(w)}, n={n}')
    h, r = divmod(n, len(w))
    return w * h + w[:r]


def increment_last(v: Sequence[int], q: int) -> Word:
    """P(v): drop the trailing run of q-1 and increment the new last symbol."""
    v = list(v)
    top = q - 1
    while v and v[-1] == top:
        v.pop()
    if not v:
        raise Exhausted
    v[-1] += 1
    return tuple(v)


def duval_next(w: Sequence[int], n: int, q: int) -> Optional[Word]:
    """Next Lyndon word of length <= n in Duval's order, or None at the end."""
    try:
        return increment_last(duval_extend(w, n), q)
    except Exhausted:
        return None


def duval_plain_next_instrumented(w: Sequence[int], n: int, q: int):
    """Reference successor on a plain array, counting symbol writes.

    Returns ``(word, updates)`` where word is the next Lyndon word of length
    exactly n (None once exhausted). D writes every copied symbol, P writes
    the incremented one; shrinking the array is free.
    """
    u = make_word(w, q)
    updates = 0
    while True:
        if len(u) > n:
            raise ContractError(f'|w|={len(u)} exceeds n={n}')
        updates += n - len(u)
        try:
            u = increment_last(duval_extend(u, n), q)
        except Exhausted:
            return None, updates
        updates += 1
        if len(u) == n:
            return u, updates


def _mobius(m: int) -> int:
    result = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def count_lyndon(n: int, q: int) -> int:
    """Number of Lyndon words of length n over q symbols (Moebius inversion)."""
    if n < 1:
        raise ContractError(f'length must be >= 1, got {n}')
    check_alphabet(q)
    total = sum(_mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


@dataclass
class UpdateTally:
    per_step: list = field(default_factory=list)
    words: int = 0

    @property
    def total(self) -> int:
        return sum(self.per_step)

    @property
    def amortized(self) -> Fraction:
        return Fraction(self.total, self.words) if self.words else Fraction(0)

    @property
    def max_step(self) -> int:
        return max(self.per_step, default=0)


class EnumState:
    """Cursor over the Lyndon words of length n, stored as a compressed array.

    Cells are ints: a value s >= 0 is a symbol s < q-1, a value -i < 0 is a
    run of i copies of q-1. ``_ends[k]`` is the word length covered by cells
    0..k. Mutated in place by :meth:`advance`.
    """

    def __init__(self, n: int, q: int, start: Optional[Sequence[int]] = None):
        check_alphabet(q)
        if n < 1:
            raise ContractError(f'length must be >= 1, got {n}')
        self.n = n
        self.q = q
        if start is None:
            start = (0,) if n == 1 else (0,) * (n - 1) + (1,)
        start = make_word(start, q)
        if len(start) != n or not is_lyndon_naive(start):
            raise ContractError(f'{start} is not a Lyndon word of length {n}')
        self._cells: list = []
        self._ends: list = []
        for s in start:
            self._put(s)
        self.update_counter = 0
        self.step_counter = 1
        self.last_updates = 0
        self.exhausted = False

    def _put(self, s):
        # untallied append of one symbol, used for initialisation only
        if s == self.q - 1:
            if self._cells and self._cells[-1] < 0:
                self._cells[-1] -= 1
                self._ends[-1] += 1
                return
            s = -1
        self._cells.append(s)
        self._ends.append((self._ends[-1] if self._ends else 0) + 1)

    def _append(self, cell: int, width: int):
        self._cells.append(cell)
        self._ends.append(self._ends[-1] + width if self._ends else width)

    def _bump_onto_tail(self, s: int) -> int:
        """Append symbol s+1 after the current tail, merging into a run."""
        cells = self._cells
        if s + 1 < self.q - 1:
            self._append(s + 1, 1)
        elif cells and cells[-1] < 0:
            cells[-1] -= 1
            self._ends[-1] += 1
        else:
            self._append(-1, 1)
        return 1

    @property
    def length(self) -> int:
        return self._ends[-1] if self._ends else 0

    @property
    def current(self) -> CompressedWord:
        items: list = []
        block: list = []
        for cell in self._cells:
            if cell >= 0:
                block.append(cell)
            else:
                items.append(tuple(block))
                items.append(-cell)
                block = []
        if block or not items:
            items.append(tuple(block))
        if items == [()]:
            items = []
        return CompressedWord(tuple(items), self.q)

    def word(self) -> Word:
        top = self.q - 1
        out: list = []
        for cell in self._cells:
            if cell >= 0:
                out.append(cell)
            else:
                out.extend([top] * -cell)
        return tuple(out)

    def advance(self) -> bool:
        """Move to the next Lyndon word of length n; False once exhausted."""
        if self.exhausted:
            return False
        cells, ends, n = self._cells, self._ends, self.n
        if self.length != n:
            raise ContractError('enumeration state lost its length invariant')
        writes = 0

        # u1 = P(v); D is the identity at full length
        if cells[-1] < 0:
            cells.pop()
            ends.pop()
            writes += 1
        if not cells:
            return self._finish(writes)
        s = cells.pop()
        ends.pop()
        if s + 1 < self.q - 1:
            self._append(s + 1, 1)
            writes += 1
        elif cells and cells[-1] < 0:
            cells[-1] -= 1
            ends[-1] += 1
            writes += 2
        else:
            self._append(-1, 1)
            writes += 1

        # u(i+1) = u(i)^h P(z), z the prefix of length r in (0, |u(i)|]
        while ends[-1] < n:
            m = ends[-1]
            r = n % m or m
            base = len(cells)
            for _ in range((n - r) // m - 1):
                for k in range(base):
                    self._append(cells[k], ends[k] - (ends[k - 1] if k else 0))
                writes += base
            c = bisect_left(ends, r, 0, base)
            j = c if cells[c] >= 0 else c - 1
            if j < 0:
                # u is the single maximal symbol, so D(u) is all maximal
                return self._finish(writes)
            for k in range(j):
                self._append(cells[k], ends[k] - (ends[k - 1] if k else 0))
            writes += j
            writes += self._bump_onto_tail(cells[j])

        self.step_counter += 1
        self.update_counter += writes
        self.last_updates = writes
        return True

    def _finish(self, writes: int) -> bool:
        self.exhausted = True
        self.update_counter += writes
        self.last_updates = writes
        return False


def next_lyndon_of_length_n(state: EnumState) -> Optional[CompressedWord]:
    """Advance `state` and return its new word, or None after the last one."""
    return state.current if state.advance() else None


def iter_lyndon(n: int, q: int, start: Optional[Sequence[int]] = None,
                tally: Optional[UpdateTally] = None) -> Iterator[Word]:
    """Stream Lyndon words of length n in lexicographic order.

    Starts at `start` (default 0^(n-1)1, or 0 when n = 1). When `tally` is
    given, the update count of every advance (including the final one that
    finds no successor) is appended to ``tally.per_step``.
    """
    state = EnumState(n, q, start)
    while True:
        yield state.word()
        if tally is not None:
            tally.words += 1
        advanced = state.advance()
        if tally is not None:
            tally.per_step.append(state.last_updates)
        if not advanced:
            return


def enumerate_all(n: int, q: int, tally: Optional[UpdateTally] = None) -> Iterator[Word]:
    """All Lyndon words of length exactly n over q symbols, increasing."""
    return iter_lyndon(n, q, tally=tally)
