"""Cross-engine equivalence and reduction checks over seeded random corpora."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .instance import Instance, InstanceError, erdos_graham_bound, random_instance
from .minconv import alltargets_minconv, closure_budget
from .oracle import (
    bellman_feasible,
    check_structure_bound,
    feasible_targets,
    oracle_residue_table,
)
from .reductions import (
    bar_item_count,
    check_frobenius_iff,
    check_uss_iff,
    detectable_violation,
    pad_instance,
    padded_frobenius_bound,
    uss_via_frobenius,
)
from .sumset import alltargets_sumset, frobenius, round_robin


def random_corpus(count: int, seed: int, n_max: int = 8, a_max: int = 200) -> list[Instance]:
    """``count`` random instances with at most ``n_max + 1`` items, all ``<= a_max``."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        hi = int(rng.integers(max(n + 1, 3), a_max + 1))
        out.append(random_instance(n, hi, int(rng.integers(2**32))))
    return out


def random_sequences(count: int, seed: int, n_max: int = 12, v_max: int = 20) -> list[list[int]]:
    """Positive sequences ``a[1..n-1]`` with ``2 <= n <= n_max``."""
    rng = np.random.default_rng(seed)
    return [
        rng.integers(1, v_max + 1, size=int(rng.integers(2, n_max + 1)) - 1).tolist()
        for _ in range(count)
    ]


def default_table_engines() -> dict:
    return {
        "oracle": oracle_residue_table,
        "roundrobin": round_robin,
        "minconv": lambda inst: alltargets_minconv(inst)[0],
        "sumset": lambda inst: alltargets_sumset(inst, method="walk"),
    }


def instance_problems(inst: Instance, engines: dict, structure: bool = False) -> list[str]:
    """Every disagreement found on one instance, as readable strings."""
    problems = []
    tables = {}
    for name, engine in engines.items():
        try:
            tables[name] = engine(inst)
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            problems.append(f"{name} raised {exc!r}")
    ref_name = "oracle" if "oracle" in tables else next(iter(tables), None)
    if ref_name is None:
        return problems
    ref = tables[ref_name]
    for name, table in tables.items():
        if table != ref:
            problems.append(f"{name} table {table.tolist()} != {ref_name} {ref.tolist()}")
    F = ref.frobenius
    fast = frobenius(inst)
    if fast != F:
        problems.append(f"sumset frobenius {fast} != {F}")
    if inst.a0 >= 2 and F > erdos_graham_bound(inst):
        problems.append(f"F={F} exceeds the Erdos-Graham bound {erdos_graham_bound(inst)}")
    if inst.a0 >= 2:
        _, calls = alltargets_minconv(inst)
        if calls > closure_budget(inst.a0):
            problems.append(f"minconv used {calls} > {closure_budget(inst.a0)} convolutions")
    if structure and inst.a0 <= 50:
        horizon = max(F, 0) + inst.an
        reach = feasible_targets(inst, horizon)
        for t in np.flatnonzero(reach).tolist():
            if not check_structure_bound(inst, t).bound_ok:
                problems.append(f"structure bound fails at t={t}")
                break
    return problems


def minimize(inst: Instance, fails) -> Instance:
    """Drop items while ``fails(instance)`` stays true and the items stay coprime."""
    items = list(inst.items)
    shrunk = True
    while shrunk and len(items) > 1:
        shrunk = False
        for k in range(len(items)):
            trial = items[:k] + items[k + 1 :]
            if reduce(math.gcd, trial) != 1:
                continue
            try:
                cand = Instance(tuple(trial))
            except InstanceError:
                continue
            if fails(cand):
                items = trial
                shrunk = True
                break
    return Instance(tuple(items))


@dataclass
class Failure:
    instance: Instance
    minimized: Instance
    problems: list[str]


@dataclass
class VerifyReport:
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_verify(count: int = 500, seed: int = 0, structure: bool = False,
               engines: dict | None = None, n_max: int = 8, a_max: int = 200,
               stop_after: int = 1) -> VerifyReport:
    """Run the equivalence suite; stops after ``stop_after`` failing instances."""
    engines = engines or default_table_engines()
    report = VerifyReport()
    for inst in random_corpus(count, seed, n_max, a_max):
        report.checked += 1
        problems = instance_problems(inst, engines, structure)
        if problems:
            small = minimize(inst, lambda c: bool(instance_problems(c, engines, structure)))
            report.failures.append(Failure(inst, small, problems))
            if len(report.failures) >= stop_after:
                break
    return report


@dataclass
class CheckRow:
    name: str
    passed: int
    total: int
    example: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def run_reduction_checks(count: int = 200, seed: int = 0) -> list[CheckRow]:
    """Seeded corpus loops for every reduction; one row per property."""
    seqs = random_sequences(count, seed)
    rows = []

    def tally(name, results):
        results = list(results)
        bad = [r for r in results if not r[0]]
        rows.append(CheckRow(name, len(results) - len(bad), len(results), bad[0][1] if bad else ""))

    uss = [check_uss_iff(s) for s in seqs]
    tally("subadd->uss iff", ((c.ok, str(list(c.sequence))) for c in uss))
    stated = [check_frobenius_iff(s, threshold="stated") for s in seqs]
    tally("subadd->frobenius iff (F < a0*M-1)",
          ((c.ok, f"{list(c.sequence)} F={c.value}") for c in stated))
    tight = [check_frobenius_iff(s, threshold="target") for s in seqs]
    tally("subadd->frobenius iff (F < a0*(M-1)-1)",
          ((c.ok, f"{list(c.sequence)} F={c.value}") for c in tight))
    tally("uss feasibility = detectable violation",
          ((c.observed == detectable_violation(c.sequence), str(list(c.sequence))) for c in uss))
    tally("single a-bar item in witnesses",
          ((bar_item_count(s) in (None, 1), str(s)) for s in seqs))

    rng = np.random.default_rng(seed + 1)
    pad_rows = []
    for _ in range(count):
        inst = random_instance(int(rng.integers(1, 6)), int(rng.integers(7, 60)), int(rng.integers(2**32)))
        while inst.a0 < 2:
            inst = random_instance(len(inst) - 1, 60, int(rng.integers(2**32)))
        t = int(rng.integers(inst.an, 5001))
        padded = pad_instance(inst, t)
        pad_rows.append((inst, t, padded))
    tally("padding keeps feasibility of t",
          ((bellman_feasible(i, t) == bellman_feasible(p, t), f"{i} t={t}") for i, t, p in pad_rows))
    tally("padded F <= 3t(floor(log2 t)+1)",
          ((round_robin(p).frobenius <= padded_frobenius_bound(t), f"{i} t={t}")
           for i, t, p in pad_rows))

    alg5 = []
    rng_t = np.random.default_rng(seed + 3)
    for inst in random_corpus(count // 2, seed + 2, n_max=4, a_max=40):
        F = oracle_residue_table(inst).frobenius
        if F < 0:
            continue
        t = int(rng_t.integers(0, F + 1))
        alg5.append((uss_via_frobenius(inst, t, frobenius) == bellman_feasible(inst, t), f"{inst} t={t}"))
    tally("frobenius comparison = bellman", alg5)
    return rows
