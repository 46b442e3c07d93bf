"""Reference matchers used as ground truth.

Both work straight from the occurrence definition with plain byte
comparisons and share no code with the automaton or the bit-parallel
matchers.
"""

from __future__ import annotations

from gapmatch.column import Occurrence
from gapmatch.pattern import CharClass, GappedPattern, PatternSet

ENVELOPE_SPAN = 64
ENVELOPE_TEXT = 256


def _ends_with(kw, text: bytes, i: int) -> bool:
    """Does keyword ``kw`` occur in ``text`` ending at position ``i``?"""
    if isinstance(kw, CharClass):
        return text[i] in kw.symbols
    start = i - len(kw.text) + 1
    return start >= 0 and text[start:i + 1] == kw.text


def dp_matrix(pattern: GappedPattern, text: bytes) -> list[list[int]]:
    """Prefix-occurrence matrix: row ``l`` column ``i`` is 1 when keywords
    ``0..l`` occur with their gaps, keyword ``l`` ending at ``i``."""
    text = bytes(text)
    n = len(text)
    rows: list[list[int]] = []
    for l, kw in enumerate(pattern.keywords):
        row = [0] * n
        for i in range(n):
            if not _ends_with(kw, text, i):
                continue
            if l == 0:
                row[i] = 1
            else:
                back = i - kw.length - pattern.gaps[l - 1]
                row[i] = int(back >= 0 and rows[l - 1][back] == 1)
        rows.append(row)
    return rows


def dp_match(ps: PatternSet, text: bytes) -> set[Occurrence]:
    text = bytes(text)
    out = set()
    for k, pat in enumerate(ps.patterns):
        last = dp_matrix(pat, text)[-1]
        out.update(Occurrence(k, i) for i, hit in enumerate(last) if hit)
    return out


def dp_columns(ps: PatternSet, text: bytes) -> list[set[tuple[int, int]]]:
    """Column view of the matrices: ``(pattern, keyword)`` prefixes ending at each position."""
    text = bytes(text)
    cols: list[set[tuple[int, int]]] = [set() for _ in range(len(text))]
    for k, pat in enumerate(ps.patterns):
        for l, row in enumerate(dp_matrix(pat, text)):
            for i, hit in enumerate(row):
                if hit:
                    cols[i].add((k, l))
    return cols


def enumerate_match(pattern: GappedPattern, text: bytes) -> set[int]:
    """End positions found by laying the pattern over every window."""
    text = bytes(text)
    m = pattern.span
    if m > ENVELOPE_SPAN or len(text) > ENVELOPE_TEXT:
        raise ValueError(
            f"outside the enumeration envelope (span {m} > {ENVELOPE_SPAN} "
            f"or text {len(text)} > {ENVELOPE_TEXT})"
        )
    ends = set()
    for start in range(len(text) - m + 1):
        pos = start
        ok = True
        for l, kw in enumerate(pattern.keywords):
            if l:
                pos += pattern.gaps[l - 1]
            if isinstance(kw, CharClass):
                ok = text[pos] in kw.symbols
            else:
                ok = text[pos:pos + kw.length] == kw.text
            if not ok:
                break
            pos += kw.length
        if ok:
            ends.add(start + m - 1)
    return ends


def enumerate_all(ps: PatternSet, text: bytes) -> set[Occurrence]:
    return {
        Occurrence(k, i)
        for k, pat in enumerate(ps.patterns)
        for i in enumerate_match(pat, text)
    }
