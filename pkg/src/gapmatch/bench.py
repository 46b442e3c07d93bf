"""Random pattern generation and engine timing.

Patterns are cut from the text itself: draw ``k - 1`` gaps uniformly from
``[0, b]``, pick a uniformly placed window of length ``k*l + sum(gaps)`` and
keep its ``k`` keyword pieces. Every generated pattern therefore occurs at
least once. Randomness comes from numpy's PCG64 generator seeded with the
given 64-bit seed, so a seed reproduces the same set everywhere.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from gapmatch import oracle
from gapmatch.column import Occurrence, as_text, preprocess
from gapmatch.decompose import decompose_set
from gapmatch.pattern import GappedPattern, PatternSet, Str, jbar_transform
from gapmatch.row import RowMatcher

RNG_ALGORITHM = "numpy.random.PCG64"
ENGINES = ("column", "row", "naive")


@dataclass(frozen=True)
class GenParams:
    k: int
    l: int
    b: int
    count: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1 or self.l < 1 or self.b < 0 or self.count < 1:
            raise ValueError("need k >= 1, l >= 1, b >= 0 and count >= 1")


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & (2**64 - 1)))


def random_text(n: int, alphabet: bytes, seed: int = 0) -> bytes:
    rng = rng_for(seed)
    table = np.frombuffer(alphabet, dtype=np.uint8)
    return table[rng.integers(0, len(table), size=n)].tobytes()


def generate_patterns(params: GenParams, text) -> PatternSet:
    text = bytes(as_text(text))
    rng = rng_for(params.seed)
    patterns = []
    for _ in range(params.count):
        gaps = [int(g) for g in rng.integers(0, params.b + 1, size=params.k - 1)]
        span = params.k * params.l + sum(gaps)
        if span > len(text):
            raise ValueError(f"text of length {len(text)} is shorter than a pattern span of {span}")
        pos = int(rng.integers(0, len(text) - span + 1))
        keywords = []
        for i in range(params.k):
            keywords.append(Str(text[pos:pos + params.l]))
            pos += params.l
            if i < len(gaps):
                pos += gaps[i]
        patterns.append(GappedPattern(tuple(keywords), tuple(gaps)))
    return PatternSet(tuple(patterns))


def run_engine(engine: str, ps: PatternSet, text, *, decompose: bool = False,
               backend: str | None = None) -> list[Occurrence]:
    """Occurrences of ``ps`` in ``text``, ordered by end position then pattern."""
    if engine == "column":
        jset = jbar_transform(ps)
        if decompose:
            jset = decompose_set(jset)
        return preprocess(jset, backend=backend).search(text)
    if decompose:
        raise ValueError("gap decomposition applies to the column engine only")
    if engine == "row":
        return RowMatcher.prepare(ps, backend).search(text)
    if engine == "naive":
        return sorted(oracle.dp_match(ps, bytes(as_text(text))), key=lambda o: (o.end, o.pattern))
    raise ValueError(f"unknown engine {engine!r}")


@dataclass(frozen=True)
class BenchRow:
    k: int
    l: int
    b: int
    count: int
    engine: str
    mean_seconds: float
    occ: int

    def tsv(self) -> str:
        return f"{self.k}\t{self.l}\t{self.b}\t{self.count}\t{self.engine}\t{self.mean_seconds:.6f}\t{self.occ}"


BENCH_HEADER = "k\tl\tb\tcount\tengine\tmean_seconds\tocc"


class EngineDisagreement(RuntimeError):
    pass


def run_bench(text, ks: Iterable[int], ls: Iterable[int], bs: Iterable[int], counts: Iterable[int],
              engines: Sequence[str] = ("column", "row"), reps: int = 3, seed: int = 0,
              timer: Callable[[], float] = time.perf_counter) -> list[BenchRow]:
    """Time every engine at every grid point; engines must agree on the occurrence count."""
    text = as_text(text)
    rows = []
    for k, l, b, count in itertools.product(ks, ls, bs, counts):
        ps = generate_patterns(GenParams(k, l, b, count, seed), text)
        results = []
        for engine in engines:
            elapsed = 0.0
            occ = 0
            for _ in range(reps):
                t0 = timer()
                occ = len(run_engine(engine, ps, text))
                elapsed += timer() - t0
            results.append(BenchRow(k, l, b, count, engine, elapsed / reps, occ))
        if len({r.occ for r in results}) > 1:
            detail = ", ".join(f"{r.engine}={r.occ}" for r in results)
            raise EngineDisagreement(f"engines disagree at k={k} l={l} b={b} count={count}: {detail}")
        rows.extend(results)
    return rows
