"""Interval feasibility sets and the solvers built on sumsets.

The positive integers are cut into intervals ``I(j) = ((j-1) a_n, j a_n]``.
``A(j)`` is the set of feasible targets in ``I(j)``; it is stored as a
length-``a_n`` boolean array whose bit ``r`` stands for ``(j-1) a_n + r + 1``.
New sets come from old ones through

    A(i + j) = (A(i) + A(j) + (S u {0})) n I(i + j),

each sumset being a boolean convolution.  Once some ``A(j)`` is full every
later interval is full too, which bounds all the loops below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .instance import Instance, ResidueTable
from .minconv import INF
from .ntt import MAX_LOG_SIZE, PRIME, cyclic_convolve_counts

DIRECT_THRESHOLD = 1024


@dataclass
class SolverStats:
    """Work counters filled in by the solvers when passed as ``stats``."""

    advance_calls: int = 0
    convolutions: int = 0


def _shift_or(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # loop over the sparser side
    if np.count_nonzero(x) > np.count_nonzero(y):
        x, y = y, x
    out = np.zeros(x.size + y.size - 1, dtype=bool)
    for i in np.flatnonzero(x):
        out[i : i + y.size] |= y
    return out


def boolean_convolve(x, y, method: str = "auto") -> np.ndarray:
    """Sumset of two index sets given as boolean arrays.

    Bit ``k`` of the result is set iff ``x[i]`` and ``y[j]`` for some
    ``i + j = k``.  ``method`` is ``"direct"`` (shift-or), ``"ntt"`` or
    ``"auto"``, which uses shift-or when both inputs have at most
    ``DIRECT_THRESHOLD`` entries.
    """
    x = np.asarray(x, dtype=bool)
    y = np.asarray(y, dtype=bool)
    if x.size == 0 or y.size == 0:
        raise ValueError("inputs must be non-empty")
    if method == "auto":
        method = "direct" if max(x.size, y.size) <= DIRECT_THRESHOLD else "ntt"
    if method == "direct":
        return _shift_or(x, y)
    if method != "ntt":
        raise ValueError(f"unknown method {method!r}")
    out_len = x.size + y.size - 1
    size = 1 << (out_len - 1).bit_length()
    if size > 1 << MAX_LOG_SIZE or min(x.size, y.size) >= PRIME:
        raise ValueError("inputs too long for the transform modulus")
    if not x.any() or not y.any():
        return np.zeros(out_len, dtype=bool)
    return cyclic_convolve_counts(x, y, size) != 0


@dataclass(frozen=True, eq=False)
class FeasibilitySet:
    index: int
    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=bool)
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @property
    def width(self) -> int:
        return self.bits.size

    @property
    def offset(self) -> int:
        """Absolute target represented by bit 0."""
        return (self.index - 1) * self.width + 1

    def count(self) -> int:
        return int(np.count_nonzero(self.bits))

    @property
    def is_full(self) -> bool:
        return bool(self.bits.all())

    def targets(self) -> np.ndarray:
        return np.flatnonzero(self.bits).astype(np.int64) + self.offset

    def __contains__(self, t) -> bool:
        r = t - self.offset
        return 0 <= r < self.width and bool(self.bits[r])

    def __eq__(self, other):
        if not isinstance(other, FeasibilitySet):
            return NotImplemented
        return self.index == other.index and np.array_equal(self.bits, other.bits)

    def __repr__(self):
        return f"FeasibilitySet(index={self.index}, targets={self.targets().tolist()})"


def reachable_prefix(inst: Instance, limit: int) -> np.ndarray:
    """Unbounded-knapsack sieve: ``r[t]`` for ``0 <= t <= limit``.

    Items are added one at a time; adding item ``a`` is a prefix-OR along
    each residue class modulo ``a``.
    """
    reach = np.zeros(limit + 1, dtype=bool)
    reach[0] = True
    for a in inst.items:
        if a > limit:
            break
        rows = -(-(limit + 1) // a)
        padded = np.zeros(rows * a, dtype=bool)
        padded[: limit + 1] = reach
        reach = np.logical_or.accumulate(padded.reshape(rows, a), axis=0).reshape(-1)[
            : limit + 1
        ]
    return reach


def base_interval(inst: Instance) -> FeasibilitySet:
    """``A(1)``: the feasible targets in ``(0, a_n]``."""
    return FeasibilitySet(1, reachable_prefix(inst, inst.an)[1:])


def item_indicator(inst: Instance, with_zero: bool = True) -> np.ndarray:
    s = np.zeros(inst.an + 1, dtype=bool)
    s[list(inst.items)] = True
    s[0] = with_zero
    return s


def advance(Ai: FeasibilitySet, Aj: FeasibilitySet, inst: Instance,
            stats: SolverStats | None = None, with_zero: bool = True) -> FeasibilitySet:
    """``A(i + j)`` from ``A(i)`` and ``A(j)``.

    ``with_zero=False`` drops the empty item from the middle summand; that
    variant may miss targets and exists only for comparison.
    """
    an = inst.an
    if Ai.width != an or Aj.width != an:
        raise ValueError("feasibility sets do not match the instance")
    k = Ai.index + Aj.index
    if k * an >= INF:
        raise OverflowError(f"interval index {k} overflows the target range")
    pair = boolean_convolve(Ai.bits, Aj.bits)
    full = boolean_convolve(pair, item_indicator(inst, with_zero))
    if stats is not None:
        stats.advance_calls += 1
        stats.convolutions += 2
    # bit r of A(k) <-> r1 + r2 + s = r + a_n - 1
    return FeasibilitySet(k, full[an - 1 : 2 * an - 1])


def uss_decide(inst: Instance, t: int, stats: SolverStats | None = None) -> bool:
    """Decide whether ``t`` is feasible by doubling and then binary folding."""
    if t < 0:
        raise ValueError("target must be non-negative")
    if t == 0 or inst.a0 == 1:
        return True
    an = inst.an
    k = -(-t // an)
    powers = [base_interval(inst)]
    while True:
        R = len(powers) - 1
        top = powers[R]
        if top.is_full:
            if 2**R <= k:
                return True
            break
        if 2**R >= k:
            break
        powers.append(advance(top, top, inst, stats))
    if 2**R == k:
        return t in powers[R]
    # k has bits below R only; start from the lowest one so the fold lands on k
    bits = [i for i in range(k.bit_length()) if k >> i & 1]
    acc = powers[bits[0]]
    for i in bits[1:]:
        if acc.is_full:
            return True
        acc = advance(acc, powers[i], inst, stats)
    return t in acc


def efficient_binary_search(powers: list[FeasibilitySet], inst: Instance,
                            stats: SolverStats | None = None):
    """Largest ``f`` with ``A(f)`` not full, given ``powers[i] = A(2**i)``.

    ``powers[-1]`` must be full and ``powers[-2]`` not.  Returns
    ``(f, A(f))`` after exactly ``len(powers) - 2`` advance calls.
    """
    R = len(powers) - 1
    if R < 1 or not powers[R].is_full or powers[R - 1].is_full:
        raise ValueError("expected exactly the last power to be full")
    L, AL = 2 ** (R - 1), powers[R - 1]
    for i in range(R - 2, -1, -1):
        mid = advance(AL, powers[i], inst, stats)
        if not mid.is_full:
            L, AL = L + 2**i, mid
    return L, AL


def doubling_powers(inst: Instance, stats: SolverStats | None = None) -> list[FeasibilitySet]:
    """``A(2**0), A(2**1), ...`` up to and including the first full one."""
    powers = [base_interval(inst)]
    while not powers[-1].is_full:
        top = powers[-1]
        powers.append(advance(top, top, inst, stats))
    return powers


def frobenius(inst: Instance, stats: SolverStats | None = None) -> int:
    if inst.a0 == 1:
        return -1
    powers = doubling_powers(inst, stats)
    f, Af = efficient_binary_search(powers, inst, stats)
    gap = int(np.flatnonzero(~Af.bits)[-1])
    return Af.offset + gap


def round_robin(inst: Instance) -> ResidueTable:
    """Residue table by adding one item at a time.

    Adding item ``a`` splits the residues mod ``a_0`` into ``gcd(a, a_0)``
    cycles under ``+a``.  Each cycle is relaxed once around, starting from
    its smallest entry; along the cycle this is a running minimum of
    ``entry[k] - k*a``.
    """
    a0 = inst.a0
    entries = np.full(a0, INF, dtype=np.int64)
    entries[0] = 0
    for a in inst.items[1:]:
        d = math.gcd(a, a0)
        length = a0 // d
        steps = np.arange(length, dtype=np.int64)
        idx = (np.arange(d, dtype=np.int64)[:, None] + steps[None, :] * (a % a0)) % a0
        vals = entries[idx]
        start = np.argmin(vals, axis=1)
        order = (start[:, None] + steps[None, :]) % length
        idx = np.take_along_axis(idx, order, axis=1)
        vals = np.take_along_axis(vals, order, axis=1)
        shift = steps * a
        entries[idx] = np.minimum.accumulate(vals - shift, axis=1) + shift
    if np.any(entries >= INF):
        raise RuntimeError("residue class left unreachable; items are not coprime")
    return ResidueTable(a0, entries)


def walk_threshold(inst: Instance) -> float:
    an = inst.an
    return math.sqrt(an * math.log2(an)) if an > 1 else 0.0


def alltargets_sumset(inst: Instance, method: str = "auto",
                      stats: SolverStats | None = None) -> ResidueTable:
    """Residue table from consecutive feasibility sets.

    With few items (``len(items) < sqrt(a_n log2 a_n)``) this defers to
    :func:`round_robin`; otherwise, or with ``method="walk"``, it walks
    ``A(1), A(2), ...`` recording the first hit of every residue class until
    an interval is full.
    """
    if method not in ("auto", "walk", "roundrobin"):
        raise ValueError(f"unknown method {method!r}")
    if method == "roundrobin" or (method == "auto" and len(inst) < walk_threshold(inst)):
        return round_robin(inst)
    a0 = inst.a0
    entries = np.full(a0, -1, dtype=np.int64)
    entries[0] = 0
    step = base_interval(inst)
    cur = step
    while True:
        vals = cur.targets()
        res, first = np.unique(vals % a0, return_index=True)
        fresh = entries[res] < 0
        entries[res[fresh]] = vals[first[fresh]]
        if cur.is_full:
            break
        cur = advance(cur, step, inst, stats)
    return ResidueTable(a0, entries)
