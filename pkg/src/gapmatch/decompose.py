"""Gap decomposition over a generating set.

Each meta-keyword gap ``g`` is written as a sum ``i_1 + ... + i_l`` of
elements of a small set ``X`` and replaced by a chain of ``l - 1`` wildcard
meta-keywords spaced ``i_1, ..., i_l`` apart. The rewritten set matches
exactly where the original does, but its distinct gap lengths all come from
``X``, so the column matcher visits at most ``|X|`` gaps per word.

In the written form of a chain, ``(i_1 - 1) * (i_2 - 1) * ... * i_l``, the
inner entries are raw gaps before a wildcard and the last entry is the end to
end distance to the next meta-keyword.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from gapmatch.pattern import JBarSet, MetaPattern, wildcard


@dataclass(frozen=True)
class GeneratingSet:
    """``elements`` generates every target gap with at most ``gamma`` summands.

    With ``offset`` set, gaps not in ``elements`` are written as ``offset``
    plus the binary expansion of the remainder; otherwise a fewest-summands
    search is used.
    """

    elements: frozenset[int]
    gamma: int
    offset: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", frozenset(self.elements))
        if not self.elements or min(self.elements) < 0:
            raise ValueError("a generating set needs non-negative elements")
        if self.gamma < 1:
            raise ValueError("gamma must be positive")


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length() if x > 1 else 0


def _floor_log2(x: int) -> int:
    return x.bit_length() - 1 if x > 0 else 0


def power_of_two_generating_set(gaps: Iterable[int]) -> GeneratingSet:
    """``{g_min} | {2**i : i <= ceil(log2 g_size)}`` with ``gamma = floor(log2 g_size) + 2``."""
    gaps = frozenset(gaps)
    if not gaps:
        raise ValueError("empty gap set")
    g_min, g_max = min(gaps), max(gaps)
    g_size = g_max - g_min + 1
    if g_size == 1:
        return GeneratingSet(frozenset({g_min}), 1, g_min)
    powers = {1 << i for i in range(_ceil_log2(g_size) + 1)}
    return GeneratingSet(frozenset({g_min} | powers), _floor_log2(g_size) + 2, g_min)


def _fewest_summands(g: int, elements: tuple[int, ...], gamma: int) -> list[int] | None:
    # Breadth-first over summand counts; positive elements only.
    positive = [x for x in elements if x > 0]
    frontier = {0: ()}
    for _ in range(gamma):
        nxt: dict[int, tuple[int, ...]] = {}
        for total, parts in frontier.items():
            for x in positive:
                t = total + x
                if t == g:
                    return sorted(parts + (x,))
                if t < g and t not in nxt:
                    nxt[t] = parts + (x,)
        if not nxt:
            break
        frontier = nxt
    return None


@lru_cache(maxsize=4096)
def _summands(g: int, gs: GeneratingSet) -> tuple[int, ...]:
    if g in gs.elements:
        return (g,)
    parts: list[int] | None = None
    if gs.offset is not None and g > gs.offset:
        rest = g - gs.offset
        bits = [1 << i for i in range(rest.bit_length()) if rest >> i & 1]
        if all(b in gs.elements for b in bits):
            parts = ([gs.offset] if gs.offset else []) + bits
    if parts is None:
        parts = _fewest_summands(g, tuple(sorted(gs.elements)), gs.gamma)
    if parts is None or len(parts) > gs.gamma:
        raise ValueError(f"gap {g} is not a sum of at most {gs.gamma} elements of {sorted(gs.elements)}")
    return tuple(sorted(parts))


def summands(g: int, gs: GeneratingSet) -> list[int]:
    """Ascending summands ``i_1 <= ... <= i_l`` of ``g`` drawn from the generating set."""
    return list(_summands(g, gs))


def phi(g: int, gs: GeneratingSet) -> tuple[int, ...]:
    """Written chain for gap ``g``: ``(i_1 - 1, ..., i_{l-1} - 1, i_l)``, wildcards in between."""
    parts = _summands(g, gs)
    return tuple(i - 1 for i in parts[:-1]) + (parts[-1],)


def format_chain(chain: tuple[int, ...]) -> str:
    return "·*·".join(str(x) for x in chain)


def decompose_set(jset: JBarSet, gs: GeneratingSet | None = None) -> JBarSet:
    """Rewrite every gap of ``jset`` as a wildcard chain over ``gs``.

    Pattern indices are preserved, so occurrences map one to one.
    """
    if not jset.gap_set:
        return jset
    if gs is None:
        gs = power_of_two_generating_set(jset.gap_set)
    star = wildcard(jset.alphabet)
    keywords = []
    metas = []
    for pat in jset.patterns:
        keys = [len(keywords)]
        keywords.append(jset.keywords[pat.keys[0]])
        gaps: list[int] = []
        for g, key in zip(pat.gaps, pat.keys[1:]):
            parts = _summands(g, gs)
            for i in parts[:-1]:
                gaps.append(i)
                keys.append(len(keywords))
                keywords.append(star)
            gaps.append(parts[-1])
            keys.append(len(keywords))
            keywords.append(jset.keywords[key])
        metas.append(MetaPattern(tuple(keys), tuple(gaps)))
    return JBarSet(tuple(keywords), tuple(metas), jset.alphabet)
