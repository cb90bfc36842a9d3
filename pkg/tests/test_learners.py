"""Sample learner behaviour, length profiles, and guess feature extraction."""

import random

import pytest

from limitlearn import (
    ConstantLearner,
    FiniteSetEnumerator,
    FreshLengthLearner,
    FunctionLearner,
    GapParityLearner,
    GuessFeatures,
    LengthParityLearner,
    ProfiledFunctionLearner,
    Registry,
    guess_features,
)


def test_constant_learner():
    m = ConstantLearner()
    assert m.length_profiled
    assert m.decide(()) == 0
    assert m.decide((4, 4, 4)) == 0
    assert m.length_code(17) == 0
    assert m.length_code_max(0, 30) == 0
    assert m.length_codes(0, 30) == frozenset({0})
    assert m.finite_codes() == frozenset({0})


def test_length_parity_learner():
    reg = Registry()
    m = LengthParityLearner(reg)
    even, odd = m.length_code(0), m.length_code(1)
    assert even != odd
    assert m.decide(()) == even
    assert m.decide((9,)) == odd
    assert m.decide((9, 9)) == even
    assert m.length_code(6) == even
    assert m.finite_codes() == frozenset({even, odd})
    # the two hypotheses name different finite sets
    assert reg.enumerate_to(even, 1) != reg.enumerate_to(odd, 1)


def test_length_parity_o1_overrides_match_scan_defaults():
    reg = Registry()
    m = LengthParityLearner(reg)
    for lo in range(5):
        for hi in range(lo, 8):
            scan_max = max(m.length_code(n) for n in range(lo, hi + 1))
            scan_all = frozenset(m.length_code(n) for n in range(lo, hi + 1))
            assert m.length_code_max(lo, hi) == scan_max
            assert m.length_codes(lo, hi) == scan_all


def test_fresh_learner_codes_exceed_length():
    reg = Registry()
    m = FreshLengthLearner(reg)
    codes = [m.length_code(n) for n in range(12)]
    assert len(set(codes)) == 12
    for n, c in enumerate(codes):
        assert c > n
    assert m.finite_codes() is None


def test_fresh_learner_codes_are_increasing():
    reg = Registry()
    m = FreshLengthLearner(reg)
    # query out of order; codes must still be consistent per length
    c5 = m.length_code(5)
    c2 = m.length_code(2)
    assert m.length_code(5) == c5
    assert m.length_code(2) == c2
    assert m.length_code_max(2, 5) == m.length_code(5)


def test_fresh_learner_hypothesis_content():
    reg = Registry()
    m = FreshLengthLearner(reg)
    c = m.length_code(4)
    assert reg.enumerate_to(c, 1) == frozenset({4})


def test_profiled_function_learner():
    table = {0: 3, 1: 3, 2: 5}
    m = ProfiledFunctionLearner(lambda n: table.get(n, 0), finite=frozenset({0, 3, 5}))
    assert m.length_profiled
    assert m.decide((8, 8)) == 5
    assert m.length_code(1) == 3
    assert m.length_codes(0, 3) == frozenset({0, 3, 5})
    assert m.finite_codes() == frozenset({0, 3, 5})


def test_function_learner_is_not_profiled():
    m = FunctionLearner(lambda seq: sum(seq) % 3)
    assert not m.length_profiled
    assert m.decide((2, 2)) == 1
    with pytest.raises(NotImplementedError):
        m.length_code(2)


def test_guess_features():
    assert guess_features(()) is None
    assert guess_features((4,)) == GuessFeatures(min_value=4, gap=5)
    assert guess_features((4, 5)) == GuessFeatures(min_value=4, gap=6)
    assert guess_features((7, 4, 5, 9)) == GuessFeatures(min_value=4, gap=6)
    assert guess_features((0, 1, 2, 3)) == GuessFeatures(min_value=0, gap=4)


def test_guess_features_gap_parity_drives_code_choice():
    calls = []

    def resolver(e, variant):
        calls.append((e, variant))
        return {"plain": 100, "hat": 200}[variant]

    m = GapParityLearner(resolver)
    assert m.decide(()) == 0
    # min 4, gap 5 (odd) -> hat side
    assert m.decide((4,)) == 200
    # min 4, gap 6 (even) -> plain side
    assert m.decide((4, 5)) == 100
    assert calls == [(4, "hat"), (4, "plain")]


def test_gap_parity_randomized_agreement_with_features():
    rng = random.Random(3)
    m = GapParityLearner(lambda e, variant: 1 if variant == "plain" else 2)
    for _ in range(300):
        seq = tuple(rng.randint(0, 9) for _ in range(rng.randint(1, 6)))
        feats = guess_features(seq)
        got = m.decide(seq)
        if feats.gap % 2 == 0:
            assert got == 1
        else:
            assert got == 2


def test_registry_backed_learners_share_a_registry():
    reg = Registry()
    a = LengthParityLearner(reg)
    b = FreshLengthLearner(reg)
    assert a.length_code(0) != b.length_code(0)
    assert reg.enumerate_to(b.length_code(0), 1) == frozenset({0})
    assert FiniteSetEnumerator({0}).at_stage(1) == frozenset({0})
