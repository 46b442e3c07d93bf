import pytest

from gapmatch import oracle
from gapmatch.bitcolumn import WORD_BITS, nwords_for
from gapmatch.column import Occurrence, preprocess, report_bits, search
from gapmatch.decompose import decompose_set
from gapmatch.pattern import GappedPattern, PatternSet, jbar_transform

from conftest import random_instance

FIVE = PatternSet((GappedPattern.of("cgt", 2, "ac"), GappedPattern.of("c", 1, "gt", 3, "c")))


def bits_to_pairs(ps, col):
    return {ps.prefix_of_bit(b) for b in col.bits()}


def test_gap_masks():
    m = preprocess(FIVE)
    assert m.C[4] == (1 << 0) | (1 << 3)
    assert m.C[3] == 1 << 2
    assert m.G == (3, 4)


def test_single_unit_pattern():
    m = preprocess(PatternSet((GappedPattern.of("a"),)))
    assert m.I == m.M == 1
    assert m.C == {} and m.G == ()


def test_first_last_masks():
    ps = PatternSet((GappedPattern.of("a", 1, "b", 0, "c"), GappedPattern.of("d", 2, "e")))
    m = preprocess(ps)
    assert m.I == (1 << 0) | (1 << 3)
    assert m.M == (1 << 2) | (1 << 4)


def test_worked_columns(backend):
    m = preprocess(FIVE, backend=backend)
    cols = list(m.columns(b"accgtaaacg"))
    assert bits_to_pairs(FIVE, cols[1]) == {(1, 0)}
    assert bits_to_pairs(FIVE, cols[4]) == {(0, 0), (1, 1)}
    assert bits_to_pairs(FIVE, cols[8]) == {(0, 1), (1, 0), (1, 2)}
    assert m.report(cols[8]) == [0, 1]
    assert m.search(b"accgtaaacg") == [Occurrence(0, 8), Occurrence(1, 8)]


def test_matrix_example(backend):
    ps = PatternSet((GappedPattern.of("c", 2, "at", 1, "t"),))
    m = preprocess(ps, backend=backend)
    text = b"atcgctcatat"
    rows = [[int(l in c.bits()) for c in m.columns(text)] for l in range(3)]
    assert rows == [
        [0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]
    assert m.search(text) == [Occurrence(0, 10)]


def test_empty_text(backend):
    assert preprocess(FIVE).search(b"", backend=backend) == []


def test_report_bits():
    assert report_bits(0, []) == []
    bit_pattern = [0, 0, 1, 2, 2, 3]
    assert report_bits((1 << 5) | (1 << 1), bit_pattern) == [0, 3]


def test_rejects_large_gap():
    ps = PatternSet((GappedPattern.of("a", 100, "b"),))
    with pytest.raises(ValueError, match="exceeds"):
        preprocess(ps, max_gap=50)


def test_columns_agree_with_oracle():
    for seed in range(60):
        ps, text = random_instance(seed, n_max=160, classes=seed % 2 == 0)
        m = preprocess(ps)
        got = [bits_to_pairs(ps, c) for c in m.columns(text)]
        assert got == oracle.dp_columns(ps, text)


def test_first_keyword_bits_match_automaton():
    for seed in range(40):
        ps, text = random_instance(seed, n_max=200)
        m = preprocess(ps)
        firsts = [ps.bit_index(k, 0) for k in range(len(ps))]
        for col, q in zip(m.columns(text), m.automaton.run(text)):
            matched = m.automaton.matched_mask(q)
            for b in firsts:
                assert (b in col) == bool(matched >> b & 1)


def test_restart_equivalence(backend):
    # Occurrences ending at i do not depend on anything after i.
    for seed in range(40):
        ps, text = random_instance(seed, n_max=120)
        m = preprocess(ps, backend=backend)
        full = m.search(text)
        for i in range(len(text)):
            prefix = [o for o in m.search(text[: i + 1]) if o.end == i]
            assert prefix == [o for o in full if o.end == i]


def test_oracle_equivalence(backend):
    for seed in range(150):
        ps, text = random_instance(seed, sigma=4, n_max=256, max_patterns=8)
        got = search(ps, text, backend=backend)
        assert got == sorted(got, key=lambda o: (o.end, o.pattern))
        assert set(got) == oracle.dp_match(ps, text)


def test_work_bound():
    for seed in range(100):
        ps, _ = random_instance(seed, max_patterns=40, max_gap=200)
        for js in (jbar_transform(ps), decompose_set(jbar_transform(ps))):
            m = preprocess(js)
            bound = nwords_for(js.klen) * min(WORD_BITS, len(m.G))
            assert m.work_per_column <= bound
            assert all(len(gs) <= min(WORD_BITS, len(m.G)) for gs in m.G_j)
            assert bin(m.I).count("1") == bin(m.M).count("1") == len(ps)


def test_straddling_patterns(backend):
    # 60 bits of filler push the real pattern across the word boundary.
    filler = [GappedPattern.of("z", 0, "z", 0, "z", 0, "z", 0, "z") for _ in range(12)]
    target = GappedPattern.of("a", 3, "c", 0, "g", 1, "t", 2, "a")
    ps = PatternSet(tuple(filler) + (target,))
    assert ps.offsets[12] < WORD_BITS < ps.offsets[13]
    text = b"a123cg4t56a" * 5 + b"zzzzz"
    got = search(ps, text, backend=backend)
    assert set(got) == oracle.dp_match(ps, text)
    assert Occurrence(12, 10) in got
