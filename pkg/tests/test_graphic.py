import random
from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gapgraph.exceptions import DomainError, SequencingError
from gapgraph.graphic import (
    DegreeMultiset,
    IncrementalVerifier,
    durfee_m,
    erdos_gallai_full,
    incremental_pd_verifier,
    is_graphic,
    sweep,
    zz_tv_reduced,
)
from gapgraph.primes import GapRecord, gap_sequence
from oracles import brute_graphic

seqs = st.lists(st.integers(min_value=0, max_value=12), min_size=0, max_size=14)


def test_multiset_basics():
    ms = DegreeMultiset.from_sequence([3, 1, 3, 2])
    assert ms.n == 4 and ms.total == 9
    assert ms.items() == ((3, 2), (2, 1), (1, 1))
    assert list(ms) == [3, 2, 1]
    assert ms.degrees() == [3, 3, 2, 1]
    assert ms.max_degree() == 3
    assert ms == DegreeMultiset({1: 1, 2: 1, 3: 2})
    assert hash(ms) == hash(DegreeMultiset.from_sequence([1, 2, 3, 3]))


def test_multiset_rejects_negative():
    with pytest.raises(DomainError):
        DegreeMultiset.from_sequence([2, -1])


@pytest.mark.parametrize(
    "seq, graphic",
    [
        ((), True),
        ((0,), True),
        ((1,), False),
        ((2,), False),
        ((1, 1), True),
        ((2, 2, 2), True),
        ((3, 3, 2, 1), False),  # odd sum; also fails at k = 2
        ((3, 3, 1, 1), False),
        ((3, 3, 2, 2), True),
        ((4, 4, 4, 1, 1), False),
        ((3, 3, 3, 3), True),
        ((5, 1, 1, 1, 1, 1), True),
    ],
)
def test_small_cases(seq, graphic):
    assert zz_tv_reduced(seq).graphic is graphic
    assert erdos_gallai_full(seq).graphic is graphic
    if len(seq) <= 7 and max(seq, default=0) <= 7:
        assert brute_graphic(sorted(seq, reverse=True)) is graphic


def test_failing_k_reported():
    v = erdos_gallai_full((3, 3, 2, 1))
    assert v.failing_k == 2
    assert zz_tv_reduced((3, 3, 1, 1)).failing_k == 2


def test_single_vertex_checks_k_equal_m():
    # (2) has m = n = 1; only the k = 1 inequality rules it out
    v = zz_tv_reduced((2,))
    assert v.m == 1 and v.checked_ks == (1,) and not v.graphic


def test_durfee():
    assert durfee_m(DegreeMultiset.from_sequence([3, 3, 2, 1]).items()) == 2
    assert durfee_m(DegreeMultiset.from_sequence([5, 5, 5, 5, 5]).items()) == 5
    assert durfee_m(()) == 0
    assert durfee_m(DegreeMultiset.from_sequence([0, 0]).items()) == 0


def test_reduced_checks_only_descents_and_m():
    v = zz_tv_reduced((6, 6, 5, 5, 5, 3, 2, 1, 1, 0))
    d = sorted((6, 6, 5, 5, 5, 3, 2, 1, 1, 0), reverse=True)
    m = max(i for i in range(1, len(d) + 1) if d[i - 1] >= i)
    expected = [k for k in range(1, m) if d[k - 1] > d[k]] + [m]
    assert v.m == m and list(v.checked_ks) == expected


@given(seqs)
@settings(max_examples=2000, deadline=None)
def test_reduced_matches_full(seq):
    assert zz_tv_reduced(seq).graphic == erdos_gallai_full(seq).graphic


@given(seqs, st.randoms(use_true_random=False))
@settings(max_examples=300, deadline=None)
def test_permutation_invariance(seq, rnd):
    shuffled = list(seq)
    rnd.shuffle(shuffled)
    assert zz_tv_reduced(seq).graphic == zz_tv_reduced(shuffled).graphic
    assert erdos_gallai_full(seq).graphic == erdos_gallai_full(shuffled).graphic


@given(seqs)
@settings(max_examples=500, deadline=None)
def test_durfee_square_fits(seq):
    v = zz_tv_reduced(seq)
    assert v.m * v.m <= sum(seq)


@given(st.lists(st.integers(0, 6), max_size=6))
@settings(max_examples=500, deadline=None)
def test_full_matches_brute_force(seq):
    assert erdos_gallai_full(seq).graphic == brute_graphic(seq)


def test_exhaustive_length_five():
    for n in range(6):
        for seq in product(range(5), repeat=n):
            assert erdos_gallai_full(seq).graphic == brute_graphic(seq), seq


def test_is_graphic_accepts_multiset():
    assert is_graphic(DegreeMultiset({2: 3}))


def test_incremental_matches_batch():
    gaps = gap_sequence(300).tolist()
    recs = [GapRecord(i + 1, 0, g) for i, g in enumerate(gaps)]
    for n, verdict in incremental_pd_verifier(recs, 300):
        assert verdict.graphic == zz_tv_reduced(gaps[:n]).graphic
        assert verdict.graphic == (n >= 2)


def test_incremental_snapshot_and_ordering():
    v = IncrementalVerifier()
    v.push(GapRecord(1, 2, 1))
    v.push(GapRecord(2, 3, 1))
    assert v.snapshot() == DegreeMultiset({1: 2})
    with pytest.raises(SequencingError):
        v.push(GapRecord(4, 7, 2))


def test_incremental_needs_two():
    with pytest.raises(DomainError):
        list(incremental_pd_verifier([], 1))


def test_sweep_small():
    rep = sweep(5000)
    assert rep["pass"] and rep["checked"] == 5000 and rep["failures"] == []


def test_random_sequences_seeded():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(1, 40)
        seq = [rng.randint(0, n) for _ in range(n)]
        assert zz_tv_reduced(seq).graphic == erdos_gallai_full(seq).graphic


def test_verdict_json():
    js = zz_tv_reduced((2, 2, 2)).to_json()
    assert js["graphic"] is True and js["m"] == 2
    assert Counter(DegreeMultiset.from_sequence([1, 1]).degrees()) == {1: 2}


@pytest.mark.parametrize("hi", [3, 30, 400, 1000])
def test_incremental_verdicts_equal_reduced(hi):
    rng = random.Random(hi)
    for _ in range(40):
        v = IncrementalVerifier()
        seq = []
        for i in range(rng.randint(1, 150)):
            g = rng.randint(0, hi)
            seq.append(g)
            got = v.push(GapRecord(i + 1, 0, g))
            want = zz_tv_reduced(seq)
            assert (got.graphic, got.failing_k, got.m, got.checked_ks) == (
                want.graphic, want.failing_k, want.m, want.checked_ks)
