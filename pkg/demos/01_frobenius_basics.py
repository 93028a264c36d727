"""Coins of 6, 9 and 20: which totals can be paid exactly?

Walks from the brute-force sieve to the residue table and then to the fast
interval engine, checking that they agree along the way.
"""
import numpy as np

from frobkit import Instance, frobenius, oracle_residue_table, round_robin
from frobkit.oracle import feasible_targets, lexmax_solution

inst = Instance((6, 9, 20))
print("items:", inst.items)

# Plain sieve over the first 60 totals
reach = feasible_targets(inst, 60)
print("payable up to 60:", np.flatnonzero(reach).tolist())
print("not payable:    ", np.flatnonzero(~reach).tolist())

# Smallest payable total in each class mod 6; everything above it in the class follows
table = oracle_residue_table(inst)
for r, v in enumerate(table.tolist()):
    print(f"  residue {r}: first payable total {v}")
print("largest unpayable total:", table.frobenius)

# Same answer from two faster engines
print("round robin:", round_robin(inst).frobenius)
print("interval doubling:", frobenius(inst))

# A witness that leans on the large coins first
x = lexmax_solution(inst, 100)
print("100 =", " + ".join(f"{m}*{a}" for m, a in zip(x.tolist(), inst.items) if m))

# Two coins have a closed form
for a, b in [(3, 5), (7, 11), (101, 250)]:
    F = frobenius(Instance((a, b)))
    print(f"F({a},{b}) = {F}; a*b - a - b = {a * b - a - b}")
