import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobkit import (
    INF,
    NEG_INF,
    Instance,
    alltargets_minconv,
    is_mod_subadditive,
    is_subadditive,
    min_plus_convolve,
    mod_min_convolve,
    oracle_residue_table,
)
from frobkit.minconv import (
    as_costseq,
    closure_budget,
    format_costseq,
    mod_closure,
    mod_to_plain_unrolling,
    plain_to_mod_padding,
    sat_add,
    seed_sequence,
)

from conftest import instances

costs = st.lists(st.one_of(st.integers(-50, 50), st.just(math.inf)), min_size=1, max_size=8)


def brute_min_plus(a, b):
    c = [math.inf] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            c[i + j] = min(c[i + j], x + y)
    return c


def test_examples():
    assert min_plus_convolve([0, 1, 3], [0, 2, 5]).tolist() == [0, 1, 3, 5, 8]
    assert mod_min_convolve([5, 7, 1], [5, 7, 1]).tolist() == [8, 2, 6]


def test_sentinels():
    assert sat_add(INF, NEG_INF) == INF
    assert sat_add(NEG_INF, 5) == NEG_INF
    assert format_costseq(as_costseq(["inf", "-inf", 3])) == ["inf", "-inf", 3]
    with pytest.raises(ValueError):
        as_costseq([2**61])
    with pytest.raises(ValueError):
        min_plus_convolve([], [1])


@given(costs, costs)
def test_matches_brute_force(a, b):
    got = format_costseq(min_plus_convolve(a, b))
    want = ["inf" if v == math.inf else v for v in brute_min_plus(a, b)]
    assert got == want


@given(costs, costs)
def test_commutative(a, b):
    assert np.array_equal(min_plus_convolve(a, b), min_plus_convolve(b, a))


@given(costs, costs, costs)
def test_associative(a, b, c):
    left = min_plus_convolve(min_plus_convolve(a, b), c)
    right = min_plus_convolve(a, min_plus_convolve(b, c))
    assert np.array_equal(left, right)


@given(st.lists(st.integers(0, 40), min_size=2, max_size=8))
def test_closure_is_idempotent(seq):
    seq[0] = 0
    closed, _ = mod_closure(seq)
    assert np.array_equal(mod_min_convolve(closed, closed), closed)
    assert is_mod_subadditive(closed) is None


@given(st.lists(st.integers(0, 40), min_size=2, max_size=8))
def test_fixpoint_iff_mod_subadditive(seq):
    seq[0] = 0
    fixed = np.array_equal(mod_min_convolve(seq, seq), as_costseq(seq))
    assert fixed == (is_mod_subadditive(seq) is None)


def test_closure_budget():
    assert [closure_budget(a) for a in (2, 3, 4, 5, 16, 17, 256, 257)] == [1, 2, 2, 3, 3, 4, 4, 5]


def test_mcnuggets_closure():
    inst = Instance((6, 9, 20))
    assert seed_sequence(inst)[0] == 0
    table, calls = alltargets_minconv(inst)
    assert table.tolist() == [0, 49, 20, 9, 40, 29]
    assert calls <= closure_budget(6)


@given(instances())
def test_minconv_table_matches_oracle(inst):
    table, calls = alltargets_minconv(inst)
    assert table == oracle_residue_table(inst)
    assert calls <= closure_budget(inst.a0) or inst.a0 == 1


def test_subadditivity_witnesses():
    assert is_subadditive([0, 1, 2, 3]) is None
    assert is_subadditive([0, 1, 3]) == (1, 1)
    assert is_mod_subadditive([0, 3, 1]) == (2, 2)


@given(st.lists(st.integers(0, 30), min_size=1, max_size=8))
def test_unrolling_preserves_violations(seq):
    assert (is_subadditive(mod_to_plain_unrolling(seq)) is None) == (is_mod_subadditive(seq) is None)


@given(st.lists(st.integers(0, 30), min_size=1, max_size=8))
def test_padding_preserves_plain_violations(seq):
    padded = plain_to_mod_padding(seq)
    assert padded.size == 2 * len(seq)
    assert (is_subadditive(padded) is None) == (is_subadditive(seq) is None)
