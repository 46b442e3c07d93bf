"""Row-wise bit-parallel matcher over chunks of the text.

Patterns are first split into single-symbol keywords. Each matrix row is then
computed one text chunk of ``w = 64`` positions at a time::

    D[r, c] = V[p_r, c] & combine_M(D[r - 1], c, gap_{r-1} + 1)

where ``V[s, c]`` marks the positions of symbol ``s`` in chunk ``c``. Only a
window of ``g_max // w + 2`` chunk words per row is retained. Occurrences of
a chunk are known once the whole chunk is read, so reports lag the text by
up to ``w - 1`` positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from gapmatch import _engine
from gapmatch.bitcolumn import WORD_BITS
from gapmatch.column import Occurrence, as_text
from gapmatch.pattern import GappedPattern, PatternSet, psi_split


def combine_M(prev_row_words: Sequence[int], c: int, g: int, w: int = WORD_BITS) -> int:
    """Bits of the previous row lagging ``g`` positions behind chunk ``c``.

    ``prev_row_words[x]`` is the chunk word ``x`` of the previous row; negative
    indices read as zero.
    """
    if g < 1:
        raise ValueError("gap distance must be at least 1")
    mask = (1 << w) - 1
    q, s = divmod(g, w)

    def word(x: int) -> int:
        return prev_row_words[x] if x >= 0 else 0

    older = word(c - q - 1) >> (w - s) if s else 0
    return older | ((word(c - q) << s) & mask)


def _check_strings(ps: PatternSet) -> None:
    if ps.has_classes:
        raise ValueError("the row matcher does not support character classes")


@dataclass
class RowMatcher:
    patterns: PatternSet
    split: tuple[GappedPattern, ...]
    sym: np.ndarray
    gapp1: np.ndarray
    row_start: np.ndarray
    window: int
    backend: str | None = None

    @classmethod
    def prepare(cls, ps: PatternSet, backend: str | None = None) -> RowMatcher:
        _check_strings(ps)
        split = tuple(psi_split(p) for p in ps.patterns)
        sym: list[int] = []
        gapp1: list[int] = []
        row_start = [0]
        for p in split:
            sym.extend(kw.text[0] for kw in p.keywords)
            gapp1.append(0)
            gapp1.extend(g + 1 for g in p.gaps)
            row_start.append(len(sym))
        window = max(gapp1, default=0) // WORD_BITS + 2
        return cls(
            patterns=ps,
            split=split,
            sym=np.array(sym, dtype=np.uint8),
            gapp1=np.array(gapp1, dtype=np.int64),
            row_start=np.array(row_start, dtype=np.int64),
            window=window,
            backend=backend,
        )

    def search(self, text, backend: str | None = None,
               on_chunk: Callable[[int, list[int]], None] | None = None) -> list[Occurrence]:
        """All occurrences, ordered by end position then pattern index.

        ``on_chunk`` instruments the pure-Python kernel and forces its use.
        """
        text = as_text(text)
        if not self.patterns.patterns or len(text) == 0:
            return []
        if on_chunk is not None:
            pats, ends = _engine.get("python").row_scan(
                text, self.sym, self.gapp1, self.row_start, self.window, on_chunk=on_chunk
            )
        else:
            kernel = _engine.get(backend or self.backend)
            pats, ends = kernel.row_scan(text, self.sym, self.gapp1, self.row_start, self.window)
        order = np.lexsort((pats, ends))
        return [Occurrence(p, e) for p, e in zip(pats[order].tolist(), ends[order].tolist())]


def row_words(pattern: GappedPattern, text, w: int = WORD_BITS) -> list[list[int]]:
    """Every chunk word of every row of the split pattern's matrix."""
    p = psi_split(pattern)
    text = bytes(as_text(text))
    nchunks = -(-len(text) // w)
    V = [[0] * nchunks for _ in range(256)]
    for i, s in enumerate(text):
        V[s][i // w] |= 1 << (i % w)
    rows = [list(V[p.keywords[0].text[0]])]
    for r in range(1, p.klen):
        prev = rows[-1]
        v = V[p.keywords[r].text[0]]
        g = p.gaps[r - 1] + 1
        rows.append([v[c] & combine_M(prev, c, g, w) for c in range(nchunks)])
    return rows


def row_matrix(pattern: GappedPattern, text, w: int = WORD_BITS) -> list[list[int]]:
    """The split pattern's 0/1 matrix, one list per row."""
    n = len(as_text(text))
    return [
        [(words[i // w] >> (i % w)) & 1 for i in range(n)]
        for words in row_words(pattern, text, w)
    ]


def search_one(pattern: GappedPattern, text, backend: str | None = None) -> list[int]:
    """End positions of ``pattern`` in ``text``."""
    matcher = RowMatcher.prepare(PatternSet((pattern,)), backend)
    return [o.end for o in matcher.search(text)]


def search_all(ps: PatternSet, text, backend: str | None = None) -> list[Occurrence]:
    return RowMatcher.prepare(ps, backend).search(text)
