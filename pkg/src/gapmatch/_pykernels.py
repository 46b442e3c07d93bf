"""Pure-Python scan kernels.

Same signatures and results as the compiled ``_kernels`` module; used when the
extension is not built or ``GAPMATCH_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import numpy as np

W = 64
MASK = (1 << W) - 1


def _report_word_desc(word: int, base: int, out: list[int]) -> None:
    while word:
        b = word.bit_length() - 1
        out.append(base + b)
        word ^= 1 << b


def column_scan(text, delta, bstate, gj_ptr, gj_gap, gj_cmask, imask, mmask, ring_len, bit_pattern):
    """Column-wise scan; returns ``(pattern_bits, ends)`` ordered by end then bit."""
    nwords = len(imask)
    delta = delta.tolist()
    bstate = [[int(x) for x in row] for row in bstate]
    ptr = [int(x) for x in gj_ptr]
    gaps = [int(x) for x in gj_gap]
    cmask = [int(x) for x in gj_cmask]
    imask = [int(x) for x in imask]
    mmask = [int(x) for x in mmask]
    bit_pattern = [int(x) for x in bit_pattern]
    ring = [[0] * nwords for _ in range(ring_len)]

    pats: list[int] = []
    ends: list[int] = []
    found: list[int] = []
    q = 0
    for i, c in enumerate(bytes(text)):
        q = delta[q][c]
        bq = bstate[q]
        slot = ring[i % ring_len]
        carry = 0
        any_match = False
        for j in range(nwords):
            h = 0
            for e in range(ptr[j], ptr[j + 1]):
                h |= ring[(i - gaps[e]) % ring_len][j] & cmask[e]
            d = (((h << 1) & MASK) | carry | imask[j]) & bq[j]
            carry = h >> (W - 1)
            slot[j] = d
            if d & mmask[j]:
                any_match = True
        if any_match:
            found.clear()
            for j in range(nwords - 1, -1, -1):
                _report_word_desc(slot[j] & mmask[j], j * W, found)
            for b in reversed(found):
                pats.append(bit_pattern[b])
                ends.append(i)
    return np.array(pats, dtype=np.int32), np.array(ends, dtype=np.int64)


def row_scan(text, sym, gapp1, row_start, window, on_chunk=None):
    """Row-wise chunked scan; returns ``(patterns, ends)`` grouped by chunk.

    ``on_chunk(c, V)`` is called after each chunk's symbol masks are cleared.
    """
    text = bytes(text)
    n = len(text)
    sym = [int(x) for x in sym]
    gapp1 = [int(x) for x in gapp1]
    row_start = [int(x) for x in row_start]
    npat = len(row_start) - 1
    V = [0] * 256
    dwin = [0] * (len(sym) * window)
    pats: list[int] = []
    ends: list[int] = []
    for c in range(-(-n // W)):
        base = c * W
        chunk = text[base:base + W]
        for off, s in enumerate(chunk):
            V[s] |= 1 << off
        slot = c % window
        for k in range(npat):
            r0, r1 = row_start[k], row_start[k + 1]
            word = V[sym[r0]]
            dwin[r0 * window + slot] = word
            for r in range(r0 + 1, r1):
                qw, s = divmod(gapp1[r], W)
                prev = (r - 1) * window
                ia, ib = c - qw - 1, c - qw
                assert c - ia < window
                a = dwin[prev + ia % window] if ia >= 0 else 0
                b = dwin[prev + ib % window] if ib >= 0 else 0
                m = (a >> (W - s) if s else 0) | ((b << s) & MASK)
                word = V[sym[r]] & m
                dwin[r * window + slot] = word
            while word:
                low = word & -word
                pats.append(k)
                ends.append(base + low.bit_length() - 1)
                word ^= low
        for s in chunk:
            V[s] = 0
        if on_chunk is not None:
            on_chunk(c, V)
    return np.array(pats, dtype=np.int32), np.array(ends, dtype=np.int64)


def combine_words(older: int, newer: int, g: int) -> int:
    """Bits of a row lagging ``g`` positions, assembled from two chunk words."""
    s = g % W
    return ((older >> (W - s)) if s else 0) | ((newer << s) & MASK)
