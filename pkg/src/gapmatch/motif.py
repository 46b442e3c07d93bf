"""Feature motif scoring.

A feature is a weighted set of ``(symbol, position)`` pairs inside a motif
window of length ``m``; a site's score is the total weight of the features
it satisfies. Sorting a feature's pairs by position turns it into a gapped
pattern with unit keywords plus the anchor ``(last position, weight)``.
Features inducing the same pattern share one rule, the rules are matched
with the column matcher, and each match credits its anchors to the site it
implies through a circular queue of ``m`` running scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from gapmatch.column import as_text, preprocess
from gapmatch.pattern import GappedPattern, PatternSet, Str


@dataclass(frozen=True)
class Feature:
    pairs: tuple[tuple[int, int], ...]   # (symbol, 1-based position)
    weight: float

    def __post_init__(self) -> None:
        pairs = tuple(sorted(((int(a), int(i)) for a, i in self.pairs), key=lambda p: p[1]))
        if not pairs:
            raise ValueError("a feature needs at least one pair")
        positions = [i for _, i in pairs]
        if len(set(positions)) != len(positions):
            raise ValueError(f"duplicate position in feature {self.pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, weight: float, *pairs: tuple[str | int, int]) -> Feature:
        return cls(tuple((ord(a) if isinstance(a, str) else a, i) for a, i in pairs), weight)

    @property
    def last(self) -> int:
        return self.pairs[-1][1]

    def induced_pattern(self) -> GappedPattern:
        keywords = tuple(Str(bytes([a])) for a, _ in self.pairs)
        gaps = tuple(i2 - i1 - 1 for (_, i1), (_, i2) in zip(self.pairs, self.pairs[1:]))
        return GappedPattern(keywords, gaps)


@dataclass(frozen=True)
class PatternRule:
    pattern: GappedPattern
    anchors: tuple[tuple[int, float], ...]   # (last position, weight), ascending


def compile_features(features: Iterable[Feature], m: int) -> list[PatternRule]:
    """Group features by induced pattern, in order of first appearance."""
    grouped: dict[GappedPattern, list[tuple[int, float]]] = {}
    for f in features:
        bad = [i for _, i in f.pairs if not 1 <= i <= m]
        if bad:
            raise ValueError(f"position {bad[0]} is outside the motif window 1..{m}")
        grouped.setdefault(f.induced_pattern(), []).append((f.last, f.weight))
    return [
        PatternRule(pat, tuple(sorted(anchors, key=lambda a: a[0])))
        for pat, anchors in grouped.items()
    ]


class ScoreQueue:
    """Running scores of the ``m`` sites that can still receive credit."""

    def __init__(self, m: int, nsites: int) -> None:
        self.m = m
        self.nsites = nsites
        self.slots = [0.0] * m

    def credit(self, site: int, weight: float) -> None:
        self.slots[site % self.m] += weight

    def finalize(self, site: int) -> float:
        """Score of ``site``; its slot is recycled for ``site + m``."""
        slot = site % self.m
        score = self.slots[slot]
        self.slots[slot] = 0.0
        return score


def score_sequence(rules: Sequence[PatternRule], m: int, text, backend: str | None = None) -> list[float]:
    """Score of every site ``s = 0 .. n - m`` (site ``s`` covers ``text[s:s + m]``)."""
    text = as_text(text)
    n = len(text)
    if n < m:
        raise ValueError(f"text of length {n} is shorter than the motif ({m})")
    nsites = n - m + 1
    if not rules:
        return [0.0] * nsites
    ps = PatternSet(tuple(r.pattern for r in rules))
    occs = preprocess(ps, backend=backend).search(text)
    queue = ScoreQueue(m, nsites)
    scores = [0.0] * nsites
    pos = 0
    for j in range(n):
        while pos < len(occs) and occs[pos].end == j:
            for last, weight in rules[occs[pos].pattern].anchors:
                site = j - last + 1
                if 0 <= site < nsites:
                    queue.credit(site, weight)
            pos += 1
        done = j - m + 1
        if done >= 0:
            scores[done] = queue.finalize(done)
    return scores


def brute_force_scores(features: Iterable[Feature], m: int, text) -> list[float]:
    """Score every window by testing every feature directly."""
    text = bytes(as_text(text))
    features = list(features)
    return [
        sum(f.weight for f in features if all(text[s + i - 1] == a for a, i in f.pairs))
        for s in range(len(text) - m + 1)
    ]


def parse_feature_file(data: bytes | str) -> list[Feature]:
    """One feature per line: ``weight<TAB>pos:sym,pos:sym,...``; ``#`` lines are comments."""
    if isinstance(data, bytes):
        data = data.decode()
    features = []
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            weight_s, pairs_s = line.split("\t")
            pairs = []
            for item in pairs_s.strip().split(","):
                pos_s, sym = item.split(":")
                if len(sym) != 1:
                    raise ValueError(f"symbol {sym!r} must be a single character")
                pairs.append((ord(sym), int(pos_s)))
            features.append(Feature(tuple(pairs), float(weight_s)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return features


def format_scores(scores: Sequence[float]) -> str:
    return "".join(f"{s}\t{score!r}\n" for s, score in enumerate(scores))
