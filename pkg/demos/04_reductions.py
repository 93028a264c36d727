"""From cost sequences to coin instances and back.

A positive sequence becomes a coin instance whose target is payable exactly
when the sequence has a detectable modular subadditivity violation.  Also
shows the padding that keeps one target's answer but shrinks the
Frobenius number, and a subset-sum decision made from three Frobenius
numbers.
"""
from frobkit import Instance, bellman_feasible, oracle_frobenius, round_robin
from frobkit.minconv import is_mod_subadditive
from frobkit.reductions import (
    compare_frobenius,
    detectable_violation,
    pad_instance,
    padded_frobenius_bound,
    subadd_to_uss,
    with_zero_entry,
)

for seq in ([1, 1, 3], [1, 2, 3], [15, 6, 8]):
    red = subadd_to_uss(seq)
    print(f"sequence 0,{','.join(map(str, seq))}: violation at {is_mod_subadditive(with_zero_entry(seq))}")
    print(f"  items {red.instance.items}, target {red.target}")
    print(f"  payable: {bellman_feasible(red.instance, red.target)}, "
          f"detectable: {detectable_violation(seq)}, F = {oracle_frobenius(red.instance)}")
# the last one wraps around with a deficit of one and is not picked up

inst, t = Instance((97, 150, 211)), 2000
padded = pad_instance(inst, t)
print("padded items:", padded.items)
print(f"t={t} payable before/after: {bellman_feasible(inst, t)}/{bellman_feasible(padded, t)}")
print(f"F before {round_robin(inst).frobenius}, after {round_robin(padded).frobenius}, "
      f"bound {padded_frobenius_bound(t)}")

inst = Instance((5, 8, 13))
for t in (18, 21, 22, 60):
    res = compare_frobenius(inst, t)
    print(f"t={t}: {res.feasible} (bellman {bellman_feasible(inst, t)}), "
          f"F values {res.base_frobenius}, {res.without_extra}, {res.with_extra}")
