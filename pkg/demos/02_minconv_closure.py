"""Residue tables as a (min, +) closure.

Start from the cheapest total in each residue class reachable with one
power-of-two multiple of a single item, then square the table under
modular (min, +) convolution until it stops changing.
"""
from frobkit import Instance, mod_min_convolve, min_plus_convolve
from frobkit.minconv import closure_budget, format_costseq, mod_closure, seed_sequence

print("plain (min,+):", min_plus_convolve([0, 1, 3], [0, 2, 5]).tolist())
print("mod 3 (min,+):", mod_min_convolve([5, 7, 1], [5, 7, 1]).tolist())

inst = Instance((6, 9, 20))
seq = seed_sequence(inst)
print("seed:", format_costseq(seq))

cur = seq
for step in range(1, closure_budget(inst.a0) + 1):
    nxt = mod_min_convolve(cur, cur)
    print(f"after squaring {step}:", format_costseq(nxt))
    if (nxt == cur).all():
        break
    cur = nxt

closed, calls = mod_closure(seq)
print(f"closure in {calls} convolutions (budget {closure_budget(inst.a0)}):", closed.tolist())

# Budget grows like log log a_0
for a0 in (2, 5, 17, 257, 65537, 10**6):
    print(f"a_0 = {a0:>7}: at most {closure_budget(a0)} squarings")
