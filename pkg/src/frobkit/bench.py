"""Benchmark harness: seeded corpora, median wall time per engine, CSV rows."""
from __future__ import annotations

import csv
import io
import statistics
import time

import numpy as np

from .instance import random_instance
from .minconv import alltargets_minconv
from .oracle import oracle_residue_table
from .sumset import SolverStats, frobenius, round_robin

COLUMNS = ["instance_id", "n", "a_0", "a_n", "F", "engine", "wall_ns", "conv_calls", "advance_calls"]
BENCH_ENGINES = ("sumset", "minconv", "roundrobin", "oracle")


def _run_engine(engine, inst):
    """Returns ``(F, conv_calls, advance_calls)``; unused counters are blank."""
    if engine == "sumset":
        stats = SolverStats()
        return frobenius(inst, stats), "", stats.advance_calls
    if engine == "minconv":
        table, calls = alltargets_minconv(inst)
        return table.frobenius, calls, ""
    if engine == "roundrobin":
        return round_robin(inst).frobenius, "", ""
    if engine == "oracle":
        return oracle_residue_table(inst).frobenius, "", ""
    raise ValueError(f"unknown engine {engine!r}")


def bench_corpus(sizes, count: int, seed: int, n_items: int = 10):
    rng = np.random.default_rng(seed)
    for size in sizes:
        for _ in range(count):
            n = min(n_items, size - 1)
            yield random_instance(n, size, int(rng.integers(2**32)))


def run_bench(sizes=(1000, 10_000, 100_000), count: int = 3, seed: int = 0,
              engines=("sumset", "roundrobin", "minconv"), reps: int = 3,
              n_items: int = 10, timing: bool = True, max_quadratic_a0: int = 2000,
              max_oracle_an: int = 2000):
    """One row per (instance, engine).

    ``minconv`` is skipped when ``a_0 > max_quadratic_a0`` and ``oracle``
    when ``a_n > max_oracle_an``.  With ``timing=False`` the ``wall_ns``
    column is 0 so the output depends only on the arguments.
    """
    rows = []
    for iid, inst in enumerate(bench_corpus(sizes, count, seed, n_items)):
        for engine in engines:
            if engine == "minconv" and inst.a0 > max_quadratic_a0:
                continue
            if engine == "oracle" and inst.an > max_oracle_an:
                continue
            times = []
            for _ in range(max(reps, 1)):
                start = time.perf_counter_ns()
                F, conv_calls, advance_calls = _run_engine(engine, inst)
                times.append(time.perf_counter_ns() - start)
            rows.append({
                "instance_id": iid,
                "n": inst.n,
                "a_0": inst.a0,
                "a_n": inst.an,
                "F": F,
                "engine": engine,
                "wall_ns": int(statistics.median(times)) if timing else 0,
                "conv_calls": conv_calls,
                "advance_calls": advance_calls,
            })
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
