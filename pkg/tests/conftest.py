from __future__ import annotations

import random

import pytest

from gapmatch import _engine
from gapmatch.pattern import CharClass, GappedPattern, PatternSet, Str, wildcard

ALPHABETS = {
    2: b"ab",
    4: b"acgt",
    20: b"ACDEFGHIKLMNPQRSTVWY",
}


@pytest.fixture(params=_engine.available())
def backend(request):
    return request.param


def random_pattern(rng: random.Random, alphabet: bytes, text: bytes, *, max_keywords=6,
                   max_kwlen=4, max_gap=16, classes=False) -> GappedPattern:
    """Half the time cut from ``text`` so that matches actually occur."""
    k = rng.randint(1, max_keywords)
    lens = [rng.randint(1, max_kwlen) for _ in range(k)]
    gaps = [rng.randint(0, max_gap) for _ in range(k - 1)]
    span = sum(lens) + sum(gaps)
    source = None
    if text and span <= len(text) and rng.random() < 0.5:
        start = rng.randint(0, len(text) - span)
        source = text[start:start + span]
    keywords = []
    pos = 0
    for i, ln in enumerate(lens):
        if classes and rng.random() < 0.3:
            if rng.random() < 0.3:
                kw = wildcard(alphabet)
            else:
                size = rng.randint(1, len(alphabet))
                syms = set(rng.sample(list(alphabet), size))
                if source is not None:
                    syms.add(source[pos])
                kw = CharClass(frozenset(syms))
            ln = 1
        elif source is not None:
            kw = Str(source[pos:pos + ln])
        else:
            kw = Str(bytes(rng.choice(alphabet) for _ in range(ln)))
        keywords.append(kw)
        pos += lens[i]
        if i < len(gaps):
            pos += gaps[i]
            if classes and kw.length != lens[i]:
                # keep the match with the source window: widen the gap
                gaps[i] += lens[i] - kw.length
    return GappedPattern(tuple(keywords), tuple(gaps))


def random_instance(seed: int, *, sigma=None, n_max=512, max_patterns=8, classes=False,
                    **kw) -> tuple[PatternSet, bytes]:
    rng = random.Random(seed)
    sigma = sigma or rng.choice(sorted(ALPHABETS))
    alphabet = ALPHABETS[sigma]
    n = rng.randint(0, n_max)
    text = bytes(rng.choice(alphabet) for _ in range(n))
    count = rng.randint(1, max_patterns)
    patterns = tuple(
        random_pattern(rng, alphabet, text, classes=classes, **kw) for _ in range(count)
    )
    return PatternSet(patterns, frozenset(alphabet)), text


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


_acceptance: list[tuple[str, str, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}  ({duration:.2f}s)")
