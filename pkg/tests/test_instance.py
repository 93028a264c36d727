import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobkit import (
    INFEASIBLE_BY_GCD,
    GcdError,
    Instance,
    InstanceError,
    ResidueTable,
    erdos_graham_bound,
    normalize_gcd,
    parse_instance,
    random_instance,
)
from frobkit.instance import MAX_ITEM, Solution, format_instance_file, parse_instance_file

from conftest import instances


def test_parse_sorts_and_dedups():
    assert parse_instance("20 6 9 6").items == (6, 9, 20)


@pytest.mark.parametrize("text", ["", "3 -5", "0 1", "3 x", "2.5 3"])
def test_parse_rejects(text):
    with pytest.raises(InstanceError):
        parse_instance(text)


def test_parse_gcd_error_names_the_divisor():
    with pytest.raises(GcdError) as info:
        parse_instance("4 6")
    assert info.value.gcd == 2
    assert "2" in str(info.value)


def test_item_size_limit():
    Instance((3, MAX_ITEM))
    with pytest.raises(InstanceError):
        Instance((3, MAX_ITEM + 1))


def test_instance_requires_strictly_ascending():
    with pytest.raises(InstanceError):
        Instance((5, 3))
    with pytest.raises(InstanceError):
        Instance((3, 3, 5))


@given(instances())
def test_serialize_roundtrip(inst):
    assert parse_instance(inst.serialize()) == inst
    items, t = parse_instance_file(format_instance_file(inst, 17))
    assert items == inst and t == 17


def test_instance_file_errors():
    with pytest.raises(InstanceError):
        parse_instance_file("3 5\ntarget 7\n")
    with pytest.raises(InstanceError):
        parse_instance_file("3 5\nt 7\nt 8\n")
    assert parse_instance_file("6 4\nt 10\n", normalize=True) == ([6, 4], 10)


def test_normalize_gcd():
    inst, g, t = normalize_gcd([4, 6], 10)
    assert inst.items == (2, 3) and g == 2 and t == 5
    assert normalize_gcd([4, 6], 7) is INFEASIBLE_BY_GCD
    assert not normalize_gcd([4, 6], 7)


@given(st.lists(st.integers(1, 50), min_size=1, max_size=5), st.integers(1, 10), st.integers(0, 200))
def test_normalize_gcd_scales_back(items, g, t):
    scaled = [g * a for a in items]
    full = math.gcd(*scaled)
    out = normalize_gcd(scaled, full * t)
    assert out is not INFEASIBLE_BY_GCD
    inst, gg, tt = out
    assert gg == full and tt == t
    assert sorted({a // gg for a in scaled}) == list(inst.items)


def test_random_instance_is_seeded():
    a = random_instance(5, 100, seed=7)
    assert a == random_instance(5, 100, seed=7)
    assert len(a) == 6 and a.an <= 100
    with pytest.raises(ValueError):
        random_instance(10, 5, seed=0)


def test_residue_table_basics():
    table = ResidueTable(3, [0, 10, 5])
    assert table.frobenius == 7
    assert [t for t in range(12) if table.is_feasible(t)] == [0, 3, 5, 6, 8, 9, 10, 11]
    assert ResidueTable.from_json(json.loads(json.dumps(table.to_json()))) == table
    with pytest.raises(ValueError):
        table.entries[0] = 1
    assert ResidueTable(1, [0]).frobenius == -1


def test_solution_total_and_support():
    x = Solution(np.array([1, 0, 2]))
    assert x.total(Instance((3, 5, 7))) == 17
    assert x.support == (0, 2)


def test_erdos_graham_values():
    assert erdos_graham_bound(Instance((3, 5))) == 10
    assert erdos_graham_bound(Instance((6, 9, 20))) == 100
    assert erdos_graham_bound(Instance((1, 4))) == -1
