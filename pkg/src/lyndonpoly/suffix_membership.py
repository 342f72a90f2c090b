"""Suffix trees and a Lyndon membership test built on them.

sigma of length n is a Lyndon word exactly when, with the sentinel ordered
below every letter, the smallest suffix of sigma sigma $ among those of
length >= n+2 is sigma sigma $ itself. The tree is built online (Ukkonen)
with path-compressed edges; child maps are dicts, and the symbol order is
only consulted when descending for the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence

from .words import ContractError, Word, check_alphabet, make_word


class SymbolOrder:
    """A total order on the letters 0..q-1 plus the sentinel (value q)."""

    def __init__(self, ranking: Sequence[int]):
        ranking = tuple(ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise ContractError(f'{ranking} is not a permutation of 0..{len(ranking) - 1}')
        self.ranking = ranking
        self._rank = {s: i for i, s in enumerate(ranking)}

    @classmethod
    def sentinel_first(cls, q: int) -> 'SymbolOrder':
        return cls((q,) + tuple(range(q)))

    @classmethod
    def sentinel_last(cls, q: int) -> 'SymbolOrder':
        return cls(tuple(range(q + 1)))

    def rank(self, symbol: int) -> int:
        return self._rank[symbol]

    def __repr__(self):
        return f'SymbolOrder({" < ".join(map(str, self.ranking))})'


class _Node:
    __slots__ = ('start', 'end', 'children', 'link', 'suffix')

    def __init__(self, start: int, end: Optional[int]):
        self.start = start
        self.end = end  # exclusive; None on leaves while building
        self.children: dict = {}
        self.link: Optional[_Node] = None
        self.suffix = -1  # start index of the suffix ending at this leaf


class SuffixTree:
    """Compressed suffix tree over `text`; leaves carry their suffix start.

    ``visits`` counts node-level work (construction steps, pruning and
    descents) so callers can check the linear cost.
    """

    def __init__(self, text: Word, root: _Node, visits: int = 0):
        self.text = text
        self.root = root
        self.visits = visits

    def edge(self, node: _Node) -> Word:
        return self.text[node.start:node.end]

    def is_empty(self) -> bool:
        return not self.root.children

    def leaves(self) -> Iterator[int]:
        """Suffix start indices of all leaves."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            if not node.children and node is not self.root:
                yield node.suffix
            stack.extend(node.children.values())

    def suffixes(self) -> List[Word]:
        """Root-to-leaf strings, read off by walking the tree."""
        out = []
        stack = [(self.root, ())]
        while stack:
            node, prefix = stack.pop()
            label = prefix + (self.edge(node) if node is not self.root else ())
            if not node.children and node is not self.root:
                out.append(label)
            for child in node.children.values():
                stack.append((child, label))
        return out


def build_suffix_tree(text: Sequence[int], sentinel: int) -> SuffixTree:
    """Ukkonen's online construction. `text` must end in its only `sentinel`."""
    text = tuple(text)
    if not text or text[-1] != sentinel or text.count(sentinel) != 1:
        raise ContractError('text must end with a sentinel that occurs exactly once')

    root = _Node(0, 0)
    visits = 1
    active_node, active_edge, active_length = root, 0, 0
    remainder = 0
    leaves: list = []

    def edge_len(node: _Node, pos: int) -> int:
        return (node.end if node.end is not None else pos + 1) - node.start

    for pos, ch in enumerate(text):
        remainder += 1
        last_internal: Optional[_Node] = None
        while remainder:
            visits += 1
            if active_length == 0:
                active_edge = pos
            nxt = active_node.children.get(text[active_edge])
            if nxt is None:
                leaf = _Node(pos, None)
                leaves.append(leaf)
                active_node.children[ch] = leaf
                if last_internal is not None:
                    last_internal.link = active_node
                    last_internal = None
            else:
                span = edge_len(nxt, pos)
                if active_length >= span:
                    active_edge += span
                    active_length -= span
                    active_node = nxt
                    continue
                if text[nxt.start + active_length] == ch:
                    if last_internal is not None and active_node is not root:
                        last_internal.link = active_node
                    active_length += 1
                    break
                split = _Node(nxt.start, nxt.start + active_length)
                active_node.children[text[active_edge]] = split
                leaf = _Node(pos, None)
                leaves.append(leaf)
                split.children[ch] = leaf
                nxt.start += active_length
                split.children[text[nxt.start]] = nxt
                if last_internal is not None:
                    last_internal.link = split
                last_internal = split
            remainder -= 1
            if active_node is root and active_length > 0:
                active_length -= 1
                active_edge = pos - remainder + 1
            elif active_node is not root:
                active_node = active_node.link or root

    # leaves were created in order of the suffixes they end
    for i, leaf in enumerate(leaves):
        leaf.end = len(text)
        leaf.suffix = i
    return SuffixTree(text, root, visits)


def restrict(tree: SuffixTree, keep: Callable[[int], bool]) -> SuffixTree:
    """Copy of `tree` holding only leaves whose suffix start satisfies `keep`.

    Internal nodes left without children are dropped; unary nodes are kept,
    which does not affect root-to-leaf strings or the minimum descent.
    """
    visits = tree.visits

    def copy(node: _Node) -> _Node:
        clone = _Node(node.start, node.end)
        clone.suffix = node.suffix
        return clone

    new_root = copy(tree.root)
    # post-order without recursion: children first, then attach if nonempty
    stack = [(tree.root, new_root, False)]
    pending: dict = {}
    while stack:
        node, clone, done = stack.pop()
        visits += 1
        if not done:
            stack.append((node, clone, True))
            for sym, child in node.children.items():
                child_clone = copy(child)
                pending[id(child_clone)] = (clone, sym)
                stack.append((child, child_clone, False))
            continue
        if node is tree.root:
            continue
        parent, sym = pending.pop(id(clone))
        if node.children:
            if clone.children:
                parent.children[sym] = clone
        elif keep(node.suffix):
            parent.children[sym] = clone
    return SuffixTree(tree.text, new_root, visits)


def prune_min_length(tree: SuffixTree, m: int) -> SuffixTree:
    """Keep only the suffixes of length at least m."""
    size = len(tree.text)
    return restrict(tree, lambda start: size - start >= m)


def min_word(tree: SuffixTree, order: SymbolOrder) -> Word:
    """Root-to-leaf word picking the order-minimal outgoing edge at each node."""
    if tree.is_empty():
        raise ContractError('an empty tree has no minimal word')
    out: list = []
    node = tree.root
    while node.children:
        tree.visits += 1
        sym = min(node.children, key=order.rank)
        node = node.children[sym]
        out.extend(tree.edge(node))
    return tuple(out)


def suffix_order(tree: SuffixTree, order: SymbolOrder) -> List[Word]:
    """All suffixes in the order given by repeatedly taking and removing Min."""
    out = []
    size = len(tree.text)
    while not tree.is_empty():
        w = min_word(tree, order)
        out.append(w)
        gone = size - len(w)
        tree = restrict(tree, lambda start, gone=gone: start != gone)
    return out


@dataclass
class MembershipResult:
    is_lyndon: bool
    minimum: Word
    visits: int


def membership(sigma: Sequence[int], n: int, q: int) -> MembershipResult:
    """Run the suffix-tree test on sigma and report the minimum and the cost."""
    check_alphabet(q)
    sigma = make_word(sigma, q)
    if len(sigma) != n or n < 1:
        raise ContractError(f'expected a word of length {n}, got {len(sigma)}')
    text = sigma + sigma + (q,)
    tree = prune_min_length(build_suffix_tree(text, q), n + 2)
    minimum = min_word(tree, SymbolOrder.sentinel_first(q))
    return MembershipResult(minimum == text, minimum, tree.visits)


def is_lyndon_suffix_tree(sigma: Sequence[int], n: int, q: int) -> bool:
    return membership(sigma, n, q).is_lyndon
