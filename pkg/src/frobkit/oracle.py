"""Brute-force ground truth.

Plain Bellman-style dynamic programs over the target values.  They are
deliberately simple and slow; every fast engine in the package is tested
against them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .instance import Instance, ResidueTable, Solution, erdos_graham_bound


def feasible_targets(inst: Instance, horizon: int) -> np.ndarray:
    """Boolean array ``r`` with ``r[t]`` true iff ``t`` is feasible, ``0 <= t <= horizon``.

    Targets are filled in blocks of ``a_0`` consecutive values: every item is
    at least ``a_0``, so a block only reads values below its own start.
    """
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    reach = np.zeros(horizon + 1, dtype=bool)
    reach[0] = True
    a0 = inst.a0
    for start in range(a0, horizon + 1, a0):
        stop = min(start + a0, horizon + 1)
        block = reach[start:stop]
        for a in inst.items:
            if a >= stop:
                break
            if a > start:
                block[a - start:] |= reach[: stop - a]
            else:
                block |= reach[start - a : stop - a]
    return reach


def bellman_feasible(inst: Instance, t: int) -> bool:
    if t < 0:
        raise ValueError("target must be non-negative")
    return bool(feasible_targets(inst, t)[t])


def residue_horizon(inst: Instance) -> int:
    """DP horizon large enough to contain every minimal residue-class target."""
    if inst.a0 == 1:
        return 0
    return min(erdos_graham_bound(inst), inst.a0 * inst.an) + inst.an


def oracle_residue_table(inst: Instance) -> ResidueTable:
    a0 = inst.a0
    if a0 == 1:
        return ResidueTable(1, [0])
    reach = feasible_targets(inst, residue_horizon(inst))
    positions = np.flatnonzero(reach)
    residues, first = np.unique(positions % a0, return_index=True)
    if residues.size != a0:
        raise RuntimeError("DP horizon too small: a residue class has no feasible target")
    return ResidueTable(a0, positions[first])


def oracle_frobenius(inst: Instance) -> int:
    return oracle_residue_table(inst).frobenius


def feasible_via_table(table: ResidueTable, t: int) -> bool:
    """``t`` is feasible iff it is at least the table entry of its residue class."""
    return table.is_feasible(t)


def reconstruct_solution(inst: Instance, t: int) -> Solution | None:
    """Witness for ``t`` extracted by walking back through the DP table, or ``None``."""
    if t < 0:
        raise ValueError("target must be non-negative")
    reach = feasible_targets(inst, t)
    if not reach[t]:
        return None
    x = [0] * len(inst)
    v = t
    while v:
        for i, a in enumerate(inst.items):
            if a <= v and reach[v - a]:
                x[i] += 1
                v -= a
                break
        else:  # pragma: no cover
            raise RuntimeError("inconsistent DP table")
    return Solution(x)


def _close_under(reach: np.ndarray, a: int) -> np.ndarray:
    # reach[v] |= reach[v - a] for ascending v, as a prefix-OR per residue mod a
    size = reach.size
    rows = -(-size // a)
    padded = np.zeros(rows * a, dtype=bool)
    padded[:size] = reach
    return np.logical_or.accumulate(padded.reshape(rows, a), axis=0).reshape(-1)[:size]


def lexmax_solution(inst: Instance, t: int) -> Solution | None:
    """Lexicographically maximal solution (largest ``x_0``, then ``x_1``, ...).

    Greedy over the items, checking each remainder against a feasibility
    table of the remaining suffix of items.
    """
    if t < 0:
        raise ValueError("target must be non-negative")
    items = inst.items
    # suffix[k][v]: v is reachable with items[k:]
    suffix = [None] * (len(items) + 1)
    base = np.zeros(t + 1, dtype=bool)
    base[0] = True
    suffix[-1] = base
    for k in range(len(items) - 1, -1, -1):
        suffix[k] = _close_under(suffix[k + 1], items[k])
    if not suffix[0][t]:
        return None
    x = []
    rem = t
    for k, a in enumerate(items):
        rest = suffix[k + 1]
        take = rem // a
        while not rest[rem - take * a]:
            take -= 1
        x.append(take)
        rem -= take * a
    assert rem == 0
    return Solution(x)


@dataclass(frozen=True)
class StructureReport:
    solution: Solution
    product: int
    support: int
    bound_ok: bool


def check_structure_bound(inst: Instance, t: int) -> StructureReport:
    """Check the support bounds on the lexicographically maximal witness of ``t``.

    ``product`` is ``prod_{i >= 1} (x_i + 1)``, which must not exceed ``a_0``;
    ``support`` is the number of non-zero entries, which must not exceed
    ``log2(a_0) + 1``.
    """
    x = lexmax_solution(inst, t)
    if x is None:
        raise ValueError(f"target {t} is infeasible")
    product = 1
    for xi in x.multiplicities[1:]:
        product *= xi + 1
    support = len(x.support)
    # support <= log2(a0) + 1  <=>  2**(support - 1) <= a0 for support >= 1
    support_ok = support == 0 or 2 ** (support - 1) <= inst.a0
    return StructureReport(x, product, support, product <= inst.a0 and support_ok)
