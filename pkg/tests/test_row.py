import random

import pytest
from hypothesis import given, settings, strategies as st

from gapmatch import oracle
from gapmatch.bitcolumn import WORD_BITS as W
from gapmatch.column import Occurrence, search as column_search
from gapmatch.pattern import CharClass, GappedPattern, PatternSet
from gapmatch.row import RowMatcher, combine_M, row_matrix, search_all, search_one

from conftest import random_instance

MASK = (1 << W) - 1


def scalar_M(words, c, g):
    bits = [(words[i // W] >> (i % W)) & 1 for i in range(len(words) * W)]
    out = 0
    for t in range(W):
        src = c * W + t - g
        if src >= 0 and bits[src]:
            out |= 1 << t
    return out


@settings(max_examples=300, deadline=None)
@given(
    st.lists(st.integers(0, MASK), min_size=1, max_size=6),
    st.integers(1, 6 * W),
    st.data(),
)
def test_combine_matches_scalar(words, g, data):
    c = data.draw(st.integers(0, len(words) - 1))
    assert combine_M(words, c, g) == scalar_M(words, c, g)


def test_combine_special_cases():
    rng = random.Random(0)
    words = [rng.getrandbits(W) for _ in range(4)]
    assert combine_M(words, 3, W) == words[2]
    assert combine_M(words, 0, 5) == (words[0] << 5) & MASK
    a, b = words[1], words[2]
    assert combine_M(words, 2, 3) == (a >> 61) | ((b << 3) & MASK)
    with pytest.raises(ValueError):
        combine_M(words, 0, 0)


def test_split_matrix():
    m = row_matrix(GappedPattern.of("c", 2, "at", 1, "t"), b"atcgctcatat")
    assert m == [
        [0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]


def test_search_one_example(backend):
    assert search_one(GappedPattern.of("c", 2, "at", 1, "t"), b"atcgctcatat", backend) == [10]


def test_absent_symbol(backend):
    assert search_one(GappedPattern.of("x", 1, "a"), b"aaaa" * 40, backend) == []


def test_two_pattern_example(backend):
    ps = PatternSet((GappedPattern.of("cgt", 2, "ac"), GappedPattern.of("c", 1, "gt", 3, "c")))
    assert search_all(ps, b"accgtaaacg", backend) == [Occurrence(0, 8), Occurrence(1, 8)]


def test_empty_inputs(backend):
    assert search_all(PatternSet(()), b"acgt", backend) == []
    assert search_all(PatternSet((GappedPattern.of("a"),)), b"", backend) == []


def test_rejects_classes():
    with pytest.raises(ValueError):
        RowMatcher.prepare(PatternSet((GappedPattern.of(CharClass(frozenset(b"ac"))),)))


def test_symbol_masks_cleared_after_each_chunk():
    ps, text = random_instance(4, sigma=4, n_max=1)
    text = bytes(random.Random(1).choice(b"acgt") for _ in range(300))
    seen = []

    def check(c, V):
        assert not any(V)
        seen.append(c)

    got = RowMatcher.prepare(ps).search(text, on_chunk=check)
    assert seen == list(range(-(-len(text) // W)))
    assert set(got) == oracle.dp_match(ps, text)


@pytest.mark.parametrize("g", [W - 1, W, W + 1, 2 * W, 2 * W + 7, 3 * W])
@pytest.mark.parametrize("n", [W * 3 + 5, W * 4, W * 5 - 1])
def test_word_boundary_gaps(backend, g, n):
    rng = random.Random(g * 1000 + n)
    text = bytes(rng.choice(b"ab") for _ in range(n))
    ps = PatternSet((
        GappedPattern.of("a", g, "b"),
        GappedPattern.of("ab", g - 1, "b", 0, "a"),
        GappedPattern.of("b", g // 2, "a", g - g // 2, "a"),
    ))
    want = sorted(oracle.dp_match(ps, text), key=lambda o: (o.end, o.pattern))
    assert want
    assert search_all(ps, text, backend) == want
    assert column_search(ps, text, backend) == want


def test_random_equivalence(backend):
    for seed in range(150):
        ps, text = random_instance(seed, n_max=400)
        want = sorted(oracle.dp_match(ps, text), key=lambda o: (o.end, o.pattern))
        assert search_all(ps, text, backend) == want
