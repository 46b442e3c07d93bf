"""Column-wise bit-parallel matcher.

Column ``D_i`` holds one bit per meta-keyword: bit ``(k, l)`` is set when the
prefix of pattern ``k`` ending with keyword ``l`` occurs ending at text
position ``i``. With ``C(g)`` marking the prefixes whose outgoing gap is
``g``, ``I`` the first keyword of each pattern and ``B`` the keywords that
end at ``i``::

    H_i = OR over g of (D[i - g] & C(g))
    D_i = ((H_i << 1) | I) & B(f_o(q_i))

``H_i`` is evaluated word by word, visiting for word ``j`` only the gaps in
``G_j`` (those whose ``C(g)`` has a bit in that word).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from gapmatch import _engine
from gapmatch.ac import AcAutomaton
from gapmatch.bitcolumn import WORD_BITS, WORD_MASK, BitColumn, nwords_for, to_words
from gapmatch.pattern import MAX_GAP, JBarSet, PatternSet, jbar_transform


class Occurrence(NamedTuple):
    pattern: int
    end: int


def as_text(text) -> np.ndarray:
    if isinstance(text, str):
        text = text.encode()
    if isinstance(text, np.ndarray):
        return np.ascontiguousarray(text, dtype=np.uint8)
    return np.frombuffer(bytes(text), dtype=np.uint8)


def report_bits(value: int, bit_pattern) -> list[int]:
    """Pattern indices of the set bits of ``D_i & M``, ascending.

    Bits are peeled from the most significant end and the result reversed.
    """
    found = []
    while value:
        b = value.bit_length() - 1
        found.append(bit_pattern[b])
        value &= ~(1 << b)
    found.reverse()
    return found


@dataclass
class ColumnMatcher:
    jset: JBarSet
    automaton: AcAutomaton
    C: dict[int, int]
    I: int
    M: int
    G: tuple[int, ...]
    G_j: tuple[tuple[int, ...], ...]
    bit_pattern: tuple[int, ...]
    backend: str | None = None
    _arrays: dict = field(default_factory=dict, repr=False)

    @property
    def klen(self) -> int:
        return self.jset.klen

    @property
    def nwords(self) -> int:
        return nwords_for(self.klen)

    @property
    def g_max(self) -> int:
        return max(self.G, default=0)

    @property
    def ring_len(self) -> int:
        """History length: at least ``g_max + 1`` columns, rounded up to a power of two."""
        return 1 << self.g_max.bit_length()

    @property
    def work_per_column(self) -> int:
        return sum(len(gs) for gs in self.G_j)

    def _kernel_arrays(self) -> dict:
        if not self._arrays:
            nw = self.nwords
            ptr = [0]
            gaps: list[int] = []
            cm: list[int] = []
            for j, gs in enumerate(self.G_j):
                for g in gs:
                    gaps.append(g)
                    cm.append((self.C[g] >> (WORD_BITS * j)) & WORD_MASK)
                ptr.append(len(gaps))
            bit_pattern = np.zeros(nw * WORD_BITS, dtype=np.int32)
            bit_pattern[: self.klen] = self.bit_pattern
            self._arrays.update(
                delta=self.automaton.delta_table,
                bstate=self.automaton.matched_words(nw),
                gj_ptr=np.array(ptr, dtype=np.int64),
                gj_gap=np.array(gaps, dtype=np.int64),
                gj_cmask=np.array(cm, dtype=np.uint64),
                imask=to_words(self.I, nw),
                mmask=to_words(self.M, nw),
                bit_pattern=bit_pattern,
            )
        return self._arrays

    def search(self, text, backend: str | None = None) -> list[Occurrence]:
        """All occurrences, ordered by end position then pattern index."""
        text = as_text(text)
        if not self.jset.patterns or len(text) == 0:
            return []
        a = self._kernel_arrays()
        kernel = _engine.get(backend or self.backend)
        pats, ends = kernel.column_scan(
            text, a["delta"], a["bstate"], a["gj_ptr"], a["gj_gap"], a["gj_cmask"],
            a["imask"], a["mmask"], self.ring_len, a["bit_pattern"],
        )
        return [Occurrence(p, e) for p, e in zip(pats.tolist(), ends.tolist())]

    def columns(self, text) -> Iterator[BitColumn]:
        """Yield every column ``D_i``; whole-vector reference evaluation."""
        history: dict[int, int] = {}
        q = 0
        for i, c in enumerate(as_text(text).tolist()):
            q = self.automaton.step(q, c)
            h = 0
            for g in self.G:
                h |= history.get(i - g, 0) & self.C[g]
            d = ((h << 1) | self.I) & self.automaton.matched_mask(q)
            history[i] = d
            history.pop(i - self.g_max - 1, None)
            yield BitColumn(d, self.klen)

    def report(self, column: BitColumn) -> list[int]:
        return report_bits(column.value & self.M, self.bit_pattern)


def preprocess(ps: PatternSet | JBarSet, *, max_gap: int = MAX_GAP, backend: str | None = None) -> ColumnMatcher:
    jset = jbar_transform(ps) if isinstance(ps, PatternSet) else ps
    if jset.g_max > max_gap:
        raise ValueError(f"maximum gap {jset.g_max} exceeds the bound {max_gap}")
    if 0 in jset.gap_set:
        raise ValueError("meta-keyword gaps must be at least 1")
    nxt = 0
    for pat in jset.patterns:
        if pat.keys != tuple(range(nxt, nxt + pat.klen)):
            raise ValueError("meta-keywords must be laid out contiguously in pattern order")
        nxt += pat.klen
    C: dict[int, int] = {}
    I = M = 0
    bit_pattern = [0] * jset.klen
    for k, pat in enumerate(jset.patterns):
        I |= 1 << pat.keys[0]
        M |= 1 << pat.keys[-1]
        for key in pat.keys:
            bit_pattern[key] = k
        for key, g in zip(pat.keys, pat.gaps):
            C[g] = C.get(g, 0) | 1 << key
    G = tuple(sorted(C))
    nw = nwords_for(jset.klen)
    G_j = tuple(
        tuple(g for g in G if (C[g] >> (WORD_BITS * j)) & WORD_MASK) for j in range(nw)
    )
    return ColumnMatcher(
        jset=jset,
        automaton=AcAutomaton(jset.keywords, jset.alphabet),
        C=C,
        I=I,
        M=M,
        G=G,
        G_j=G_j,
        bit_pattern=tuple(bit_pattern),
        backend=backend,
    )


def search(ps: PatternSet | JBarSet, text, backend: str | None = None) -> list[Occurrence]:
    return preprocess(ps, backend=backend).search(text)
