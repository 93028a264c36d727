import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobkit import Instance, bellman_feasible, oracle_frobenius, round_robin
from frobkit.reductions import (
    bar_item_count,
    check_frobenius_iff,
    check_uss_iff,
    compare_frobenius,
    detectable_violation,
    pad_instance,
    padded_frobenius_bound,
    sequence_violated,
    subadd_to_frobenius,
    subadd_to_uss,
    uss_via_frobenius,
)

from conftest import instances

sequences = st.lists(st.integers(1, 20), min_size=1, max_size=8)


def test_construction_values():
    red = subadd_to_uss([1, 1, 3])
    assert red.instance.a0 == 8 and red.provenance["M"] == 14 and red.target == 103
    assert red.instance.items[:4] == (8, 10, 12, 30)
    assert all(b % 2 == 1 for b in red.bar_items)
    assert bellman_feasible(red.instance, red.target)
    assert subadd_to_frobenius([1, 1, 3]).threshold == 111


def test_additive_sequence_is_infeasible():
    red = subadd_to_uss([1, 2, 3])
    assert not sequence_violated([1, 2, 3])
    assert not bellman_feasible(red.instance, red.target)


@pytest.mark.parametrize("seq", [[], [0, 1], [-1]])
def test_bad_sequences(seq):
    with pytest.raises(ValueError):
        subadd_to_uss(seq)


def test_wraparound_deficit_one_is_missed():
    # a[2] + a[3] = 14 falls short of a[(2 + 3) mod 4] = 15 by exactly one
    assert sequence_violated([15, 6, 8])
    assert not detectable_violation([15, 6, 8])
    red = subadd_to_uss([15, 6, 8])
    assert not bellman_feasible(red.instance, red.target)
    assert not check_uss_iff([15, 6, 8]).ok


@given(sequences)
def test_feasibility_matches_detectable_violation(seq):
    red = subadd_to_uss(seq)
    assert bellman_feasible(red.instance, red.target) == detectable_violation(seq)
    assert check_uss_iff(seq).observed == detectable_violation(seq)


@given(sequences)
def test_detectable_implies_violated(seq):
    assert not detectable_violation(seq) or sequence_violated(seq)


@given(sequences)
def test_frobenius_at_target_tracks_feasibility(seq):
    assert check_frobenius_iff(seq, threshold="target").observed == detectable_violation(seq)


def test_frobenius_without_violation_sits_at_target():
    # no violation: the target itself is the largest infeasible value
    red = subadd_to_frobenius([1, 2, 3])
    F = oracle_frobenius(red.instance)
    assert F == red.threshold - red.instance.a0
    assert F < red.threshold  # so the comparison against a_0 M - 1 cannot separate


@given(sequences)
def test_single_bar_item(seq):
    assert bar_item_count(seq) in (None, 1)


def test_pad_example():
    padded = pad_instance(Instance((3, 5)), 10)
    assert padded.items == (3, 5, 13, 14)
    with pytest.raises(ValueError):
        pad_instance(Instance((3, 50)), 10)


@given(instances(max_items=4, max_value=40), st.integers(40, 600))
def test_padding(inst, t):
    if inst.a0 < 2:
        return
    padded = pad_instance(inst, t)
    assert bellman_feasible(padded, t) == bellman_feasible(inst, t)
    assert round_robin(padded).frobenius <= padded_frobenius_bound(t)


def test_compare_examples():
    assert uss_via_frobenius(Instance((3, 5)), 7) is False
    res = compare_frobenius(Instance((3, 5)), 100)
    assert res.feasible and res.early_exit


def test_compare_falls_back_when_tail_shares_divisor():
    res = compare_frobenius(Instance((3, 4, 8)), 5)
    assert res.used_full_instance and res.feasible is False
    assert compare_frobenius(Instance((3, 4, 8)), 4).feasible


@given(instances(max_items=4, max_value=30), st.data())
def test_compare_matches_bellman(inst, data):
    F = oracle_frobenius(inst)
    if F < 0:
        return
    t = data.draw(st.integers(0, F))
    assert uss_via_frobenius(inst, t) == bellman_feasible(inst, t)
    assert uss_via_frobenius(inst, t, oracle_frobenius) == bellman_feasible(inst, t)
