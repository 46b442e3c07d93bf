"""Aho-Corasick automaton over the meta-keywords of a pattern set.

Every keyword string is inserted into a trie; a character class contributes
each of its symbols as a one-byte string. All strings coming from the same
meta-keyword set the same bit. After the trie is built, a breadth-first pass
computes fail links, output links and the merged bit-vectors ``B(q)``: the
set of meta-keywords that are suffixes of ``label(q)``.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from typing import Iterable, Iterator, Sequence

import numpy as np

from gapmatch.bitcolumn import BitColumn, to_words
from gapmatch.pattern import ALL_BYTES, JBarSet, Keyword, PatternSet, jbar_transform

ROOT = 0


class AcAutomaton:
    """Goto/fail/output-link automaton with per-state keyword bit-vectors.

    Transitions of the trie are kept as sorted label arrays per state and
    looked up by binary search. :attr:`delta_table` offers the equivalent
    dense 256-column transition table used by the compiled kernels.
    """

    def __init__(self, keywords: Sequence[Keyword], alphabet: Iterable[int] = ALL_BYTES) -> None:
        self.nbits = len(keywords)
        self.alphabet = frozenset(alphabet)
        goto: list[dict[int, int]] = [{}]
        labels: list[bytes] = [b""]
        direct = [0]
        for bit, kw in enumerate(keywords):
            for s in kw.strings():
                q = ROOT
                for c in s:
                    nxt = goto[q].get(c)
                    if nxt is None:
                        nxt = len(goto)
                        goto[q][c] = nxt
                        goto.append({})
                        labels.append(labels[q] + bytes([c]))
                        direct.append(0)
                    q = nxt
                direct[q] |= 1 << bit
        nstates = len(goto)
        self._labels = labels
        self._keys = [tuple(sorted(g)) for g in goto]
        self._targets = [tuple(g[c] for c in keys) for g, keys in zip(goto, self._keys)]
        self.is_keyword = [d != 0 for d in direct]

        fail = [ROOT] * nstates
        out = [-1] * nstates
        order = [ROOT]
        queue = deque([ROOT])
        while queue:
            q = queue.popleft()
            for c, child in goto[q].items():
                if q != ROOT:
                    f = fail[q]
                    while f != ROOT and c not in goto[f]:
                        f = fail[f]
                    fail[child] = goto[f].get(c, ROOT)
                out[child] = fail[child] if self.is_keyword[fail[child]] else out[fail[child]]
                order.append(child)
                queue.append(child)
        self.fail = fail
        self.out = out
        self.bfs_order = order

        # BFS order guarantees B(f_o(q)) is final before q is visited.
        bsets = list(direct)
        for q in order:
            if self.is_keyword[q] and out[q] >= 0:
                bsets[q] |= bsets[out[q]]
        self.bsets = bsets
        self._matched = [
            bsets[q] if self.is_keyword[q] else (bsets[out[q]] if out[q] >= 0 else 0)
            for q in range(nstates)
        ]
        self._delta: np.ndarray | None = None

    @classmethod
    def build(cls, ps: PatternSet | JBarSet) -> AcAutomaton:
        if isinstance(ps, PatternSet):
            ps = jbar_transform(ps)
        return cls(ps.keywords, ps.alphabet)

    @property
    def nstates(self) -> int:
        return len(self._keys)

    def label(self, q: int) -> bytes:
        return self._labels[q]

    def goto(self, q: int, c: int) -> int | None:
        keys = self._keys[q]
        i = bisect_left(keys, c)
        if i < len(keys) and keys[i] == c:
            return self._targets[q][i]
        return None

    def step(self, q: int, c: int) -> int:
        while True:
            nxt = self.goto(q, c)
            if nxt is not None:
                return nxt
            if q == ROOT:
                return ROOT
            q = self.fail[q]

    def run(self, text: bytes) -> Iterator[int]:
        """States after reading each prefix of ``text``."""
        q = ROOT
        for c in text:
            q = self.step(q, c)
            yield q

    def matched_mask(self, q: int) -> int:
        return self._matched[q]

    def matched_bits(self, q: int) -> BitColumn:
        """Meta-keywords that end with the last symbol read in state ``q``."""
        return BitColumn(self._matched[q], self.nbits)

    @property
    def delta_table(self) -> np.ndarray:
        """Complete transition function as an ``(nstates, 256)`` int32 table."""
        if self._delta is None:
            delta = np.zeros((self.nstates, 256), dtype=np.int32)
            for q in self.bfs_order:
                if q != ROOT:
                    delta[q] = delta[self.fail[q]]
                for c, t in zip(self._keys[q], self._targets[q]):
                    delta[q, c] = t
            self._delta = delta
        return self._delta

    def matched_words(self, nwords: int) -> np.ndarray:
        """``matched_bits`` of every state as an ``(nstates, nwords)`` uint64 array."""
        out = np.zeros((self.nstates, nwords), dtype=np.uint64)
        for q, mask in enumerate(self._matched):
            if mask:
                out[q] = to_words(mask, nwords)
        return out


def build(ps: PatternSet | JBarSet) -> AcAutomaton:
    return AcAutomaton.build(ps)
