import random

import pytest

from gapmatch.motif import (
    Feature,
    ScoreQueue,
    brute_force_scores,
    compile_features,
    format_scores,
    parse_feature_file,
    score_sequence,
)
from gapmatch.pattern import GappedPattern


def test_compile_example():
    rules = compile_features([Feature.of(1.5, ("c", 1), ("a", 4), ("t", 5))], 5)
    assert len(rules) == 1
    assert rules[0].pattern == GappedPattern.of("c", 2, "a", 0, "t")
    assert rules[0].anchors == ((5, 1.5),)


def test_single_pair():
    rules = compile_features([Feature.of(2.0, ("g", 3))], 4)
    assert rules[0].pattern == GappedPattern.of("g")
    assert rules[0].anchors == ((3, 2.0),)


def test_shared_pattern_merges():
    rules = compile_features([Feature.of(1.0, ("a", 1), ("t", 3)), Feature.of(0.5, ("a", 2), ("t", 4))], 4)
    assert len(rules) == 1
    assert rules[0].pattern == GappedPattern.of("a", 1, "t")
    assert rules[0].anchors == ((3, 1.0), (4, 0.5))


def test_invalid_features():
    with pytest.raises(ValueError):
        Feature.of(1.0, ("a", 2), ("c", 2))
    with pytest.raises(ValueError):
        compile_features([Feature.of(1.0, ("a", 6))], 5)
    with pytest.raises(ValueError):
        score_sequence([], 5, b"acg")


def test_no_features():
    assert score_sequence([], 3, b"acgtac") == [0.0] * 4


def test_full_window_feature(backend):
    f = Feature.of(0.75, ("a", 1), ("c", 2), ("g", 3), ("t", 4))
    text = b"ttacgatt"
    scores = score_sequence(compile_features([f], 4), 4, text, backend)
    assert scores == [0.0, 0.0, 0.0, 0.0, 0.0]
    text = b"ttacgtgg"
    scores = score_sequence(compile_features([f], 4), 4, text, backend)
    assert scores == [0.0, 0.0, 0.75, 0.0, 0.0]


def test_queue_recycles_slots():
    q = ScoreQueue(3, 10)
    q.credit(1, 2.0)
    q.credit(1, 0.5)
    assert q.finalize(1) == 2.5
    q.credit(4, 1.0)
    assert q.finalize(4) == 1.0


def random_features(rng, m, alphabet, count):
    feats = []
    for _ in range(count):
        q = rng.randint(1, min(m, 4))
        positions = rng.sample(range(1, m + 1), q)
        pairs = tuple((rng.choice(alphabet), i) for i in positions)
        feats.append(Feature(pairs, rng.randint(-64, 64) / 8))
    return feats


def test_random_against_brute_force(backend):
    rng = random.Random(42)
    for _ in range(60):
        m = rng.randint(1, 12)
        alphabet = rng.choice([b"ab", b"acgt"])
        text = bytes(rng.choice(alphabet) for _ in range(rng.randint(m, 300)))
        feats = random_features(rng, m, alphabet, rng.randint(0, 20))
        got = score_sequence(compile_features(feats, m), m, text, backend)
        assert got == brute_force_scores(feats, m, text)


def test_feature_file_round_trip():
    feats = parse_feature_file(b"# w\tpairs\n1.5\t1:c,4:a,5:t\n-0.25\t3:g\n")
    assert feats == [Feature.of(1.5, ("c", 1), ("a", 4), ("t", 5)), Feature.of(-0.25, ("g", 3))]
    with pytest.raises(ValueError, match="line 1"):
        parse_feature_file(b"1.0\t1:cc\n")
    assert format_scores([0.0, 1.5]) == "0\t0.0\n1\t1.5\n"
