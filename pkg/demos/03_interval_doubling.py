"""Feasible targets in blocks of width a_n.

A(j) holds the payable totals in ((j-1) a_n, j a_n].  Two blocks combine
into the block at the summed index with two boolean convolutions, so the
largest unpayable total can be found by doubling and a binary search.
"""
import time

import numpy as np

from frobkit import Instance, advance, base_interval, frobenius, random_instance, round_robin
from frobkit.sumset import SolverStats, doubling_powers, efficient_binary_search

inst = Instance((6, 9, 20))
A1 = base_interval(inst)
cur = A1
while True:
    print(f"A({cur.index}) = {cur.targets().tolist()}  ({cur.count()}/{cur.width})")
    if cur.is_full:
        break
    cur = advance(cur, A1, inst)

powers = doubling_powers(inst)
print("doubling reached index", powers[-1].index)
f, Af = efficient_binary_search(powers, inst)
gap = Af.offset + int(np.flatnonzero(~Af.bits)[-1])
print(f"last non-full block is A({f}); its top gap is {gap}")

# A larger instance: count the work
inst = random_instance(30, 200_000, seed=4)
stats = SolverStats()
start = time.perf_counter()
F = frobenius(inst, stats)
print(f"a_0={inst.a0}, a_n={inst.an}: F={F} with {stats.advance_calls} block merges "
      f"in {time.perf_counter() - start:.2f} s (round robin says {round_robin(inst).frobenius})")
