import random

import pytest

from gapmatch import oracle
from gapmatch.column import Occurrence, preprocess
from gapmatch.decompose import (
    GeneratingSet,
    decompose_set,
    format_chain,
    phi,
    power_of_two_generating_set,
    summands,
)
from gapmatch.pattern import GappedPattern, PatternSet, jbar_transform

from conftest import random_instance

FIVE = PatternSet((GappedPattern.of("cgt", 2, "ac"), GappedPattern.of("c", 1, "gt", 3, "c")))


def floor_log2(x):
    return x.bit_length() - 1


def test_one_five_chains():
    gs = GeneratingSet(frozenset({1, 5}), 2)
    assert format_chain(phi(2, gs)) == "0·*·1"
    assert format_chain(phi(6, gs)) == "0·*·5"
    assert format_chain(phi(10, gs)) == "4·*·5"
    assert phi(1, gs) == (1,)


def test_powers_of_two_chains():
    gs = GeneratingSet(frozenset({1, 2, 4, 8}), 4)
    assert format_chain(phi(5, gs)) == "0·*·4"
    assert format_chain(phi(6, gs)) == "1·*·4"
    assert format_chain(phi(10, gs)) == "1·*·8"


def test_power_of_two_construction():
    gs = power_of_two_generating_set({1, 2, 5, 6, 10})
    assert gs.elements == {1, 2, 4, 8, 16}
    assert gs.gamma == floor_log2(10) + 2
    for g in (1, 2, 5, 6, 10):
        assert sum(summands(g, gs)) == g
        assert len(summands(g, gs)) <= gs.gamma


def test_singleton_and_zero():
    gs = power_of_two_generating_set({7})
    assert gs.elements == {7} and gs.gamma == 1
    assert phi(7, gs) == (7,)
    gs0 = power_of_two_generating_set({0})
    assert gs0.elements == {0}
    assert phi(0, gs0) == (0,)


def test_zero_in_gaps_keeps_zero():
    gs = power_of_two_generating_set({0, 3, 9})
    assert 0 in gs.elements
    assert phi(0, gs) == (0,)
    assert phi(9, gs) == (0, 8)


@pytest.mark.parametrize("low", [0, 1, 37])
def test_conservation(low):
    gs = power_of_two_generating_set(range(low, 10_001))
    for g in range(low, 10_001):
        chain = phi(g, gs)
        assert sum(chain) + len(chain) - 1 == g
        assert len(chain) <= gs.gamma
        assert all(x >= 0 for x in chain)


def test_ungeneratable_gap():
    gs = GeneratingSet(frozenset({4}), 2)
    with pytest.raises(ValueError):
        phi(3, gs)


def test_worked_set_equivalence(backend):
    js = jbar_transform(FIVE)
    dec = decompose_set(js)
    got = preprocess(dec, backend=backend).search(b"accgtaaacg")
    assert got == [Occurrence(0, 8), Occurrence(1, 8)]


def test_unchanged_when_gaps_in_x():
    js = jbar_transform(FIVE)
    gs = GeneratingSet(frozenset({3, 4}), 1)
    assert decompose_set(js, gs) == js


def test_random_bounds_and_equivalence():
    rng = random.Random(2)
    for seed in range(150):
        ps, text = random_instance(seed, n_max=300, classes=seed % 3 == 0,
                                   max_gap=rng.choice([4, 16, 64, 300]))
        js = jbar_transform(ps)
        dec = decompose_set(js)
        if js.gap_set:
            bound = floor_log2(js.g_size) + 2
            assert len(dec.gap_set) <= 2 * bound
            assert dec.klen < bound * js.klen
            assert dec.gap_set <= power_of_two_generating_set(js.gap_set).elements
        assert set(preprocess(dec).search(text)) == oracle.dp_match(ps, text)
