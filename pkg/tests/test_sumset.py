import logging

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobkit import (
    FeasibilitySet,
    Instance,
    advance,
    alltargets_sumset,
    base_interval,
    bellman_feasible,
    boolean_convolve,
    efficient_binary_search,
    erdos_graham_bound,
    frobenius,
    oracle_frobenius,
    oracle_residue_table,
    round_robin,
    uss_decide,
)
from frobkit.oracle import feasible_targets
from frobkit.sumset import SolverStats, doubling_powers

from conftest import instances

log = logging.getLogger(__name__)
bitsets = st.lists(st.booleans(), min_size=1, max_size=512)


def oracle_interval(inst, j):
    reach = feasible_targets(inst, j * inst.an)
    return reach[(j - 1) * inst.an + 1 : j * inst.an + 1]


def test_boolean_convolve_examples():
    x = np.zeros(3, bool); x[[0, 2]] = True
    y = np.zeros(4, bool); y[[0, 3]] = True
    assert np.flatnonzero(boolean_convolve(x, y)).tolist() == [0, 2, 3, 5]
    assert np.array_equal(boolean_convolve(x, [True]), x)


@given(bitsets, bitsets)
def test_ntt_matches_shift_or(x, y):
    assert np.array_equal(boolean_convolve(x, y, "ntt"), boolean_convolve(x, y, "direct"))


def test_base_interval_examples():
    assert base_interval(Instance((3, 5))).targets().tolist() == [3, 5]
    assert base_interval(Instance((2, 3))).targets().tolist() == [2, 3]
    assert base_interval(Instance((1,))).targets().tolist() == [1]


def test_advance_three_five():
    inst = Instance((3, 5))
    A1 = base_interval(inst)
    A2 = advance(A1, A1, inst)
    assert A2.index == 2 and A2.targets().tolist() == [6, 8, 9, 10]
    assert 9 in A2 and 7 not in A2


def test_advance_rejects_mismatched_width():
    with pytest.raises(ValueError):
        advance(base_interval(Instance((3, 5))), base_interval(Instance((2, 3))), Instance((3, 5)))


def test_mcnuggets_chain_matches_oracle():
    inst = Instance((6, 9, 20))
    step = base_interval(inst)
    cur = step
    for j in range(1, 6):
        assert np.array_equal(cur.bits, oracle_interval(inst, j))
        cur = advance(cur, step, inst)


@given(instances(max_items=6, max_value=150))
def test_chain_sound_complete_monotone(inst):
    step = base_interval(inst)
    cur, last = step, -1
    for j in range(1, 40):
        assert np.array_equal(cur.bits, oracle_interval(inst, j))
        assert cur.count() >= last
        last = cur.count()
        if cur.is_full:
            break
        cur = advance(cur, step, inst)


@given(instances(max_items=6, max_value=150), st.integers(1, 6), st.integers(1, 6))
def test_advance_any_pair(inst, i, j):
    powers = {k: FeasibilitySet(k, oracle_interval(inst, k)) for k in (i, j)}
    got = advance(powers[i], powers[j], inst)
    assert np.array_equal(got.bits, oracle_interval(inst, i + j))


def test_exactness_probe_without_zero():
    """The middle summand without the empty item: a subset of the true set.

    Differences are counted and logged; on this corpus they do occur, which
    is why the solver keeps the empty item.
    """
    rng = np.random.default_rng(11)
    missing = 0
    for _ in range(100):
        items = sorted(set(rng.integers(2, 120, size=int(rng.integers(2, 6))).tolist()))
        try:
            inst = Instance(tuple(items))
        except ValueError:
            continue
        A1 = base_interval(inst)
        for i, j in ((1, 1), (1, 2), (2, 2)):
            Ai = FeasibilitySet(i, oracle_interval(inst, i))
            Aj = FeasibilitySet(j, oracle_interval(inst, j))
            plain = advance(Ai, Aj, inst, with_zero=False)
            truth = oracle_interval(inst, i + j)
            assert not np.any(plain.bits & ~truth)
            missing += int(np.count_nonzero(truth & ~plain.bits))
        del A1
    log.info("exactness probe: %d targets missed without the empty item", missing)
    print(f"exactness probe: {missing} targets missed without the empty item")


@pytest.mark.parametrize("items,t,want", [((3, 5), 7, False), ((3, 5), 22, True), ((6, 9, 20), 0, True)])
def test_uss_examples(items, t, want):
    assert uss_decide(Instance(items), t) is want


@given(instances(max_items=5, max_value=80), st.data())
def test_uss_matches_bellman(inst, data):
    hi = 4 * max(erdos_graham_bound(inst), inst.an)
    t = data.draw(st.integers(0, hi))
    assert uss_decide(inst, t) == bellman_feasible(inst, t)


@pytest.mark.parametrize("items,F", [((3, 5), 7), ((6, 9, 20), 43), ((2, 3), 1), ((1, 4), -1)])
def test_frobenius_examples(items, F):
    assert frobenius(Instance(items)) == F


def test_binary_search_examples():
    # A(2) = {6, 8, 9, 10} misses 7, so the last non-full interval is the second
    inst = Instance((3, 5))
    f, Af = efficient_binary_search(doubling_powers(inst), inst)
    assert f == 2 and 7 not in Af and Af.offset <= 7
    inst = Instance((6, 9, 20))
    f, Af = efficient_binary_search(doubling_powers(inst), inst)
    assert f == 3 and 43 not in Af and Af.offset <= 43 < Af.offset + Af.width
    with pytest.raises(ValueError):
        efficient_binary_search([base_interval(inst)], inst)


@given(instances(max_items=8, max_value=200))
def test_frobenius_matches_oracle(inst):
    stats = SolverStats()
    F = frobenius(inst, stats)
    assert F == oracle_frobenius(inst)
    if F >= 0:
        bound = 2 * int(np.ceil(np.log2(F / inst.an + 2))) + 2
        assert stats.advance_calls <= bound


@pytest.mark.parametrize("items,table", [((3, 5), [0, 10, 5]), ((2, 3), [0, 3]), ((1,), [0])])
def test_table_examples(items, table):
    inst = Instance(items)
    assert round_robin(inst).tolist() == table
    assert alltargets_sumset(inst, method="walk").tolist() == table


@given(instances(max_items=8, max_value=200))
def test_tables_agree(inst):
    ref = oracle_residue_table(inst)
    assert round_robin(inst) == ref
    assert alltargets_sumset(inst, method="walk") == ref
    assert alltargets_sumset(inst) == ref
