"""Instance constructions that tie subadditivity, subset sum and Frobenius together.

* :func:`subadd_to_uss` / :func:`subadd_to_frobenius` encode a positive
  sequence ``a[1..n-1]`` as a coin instance whose target ``2n(M-1) - 1`` is
  feasible exactly when the sequence (with ``a[0] = 0``) has a modular
  subadditivity violation.
* :func:`pad_instance` appends ``O(log a_0)`` large items that keep the
  feasibility of one target but pull the Frobenius number down to
  ``O(t log t)``.
* :func:`uss_via_frobenius` decides subset sum with three Frobenius calls.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import reduce

from .instance import Instance, InstanceError
from .minconv import is_mod_subadditive
from .oracle import reconstruct_solution
from .sumset import frobenius, uss_decide

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionInstance:
    instance: Instance
    target: int | None
    threshold: int | None
    provenance: dict = field(default_factory=dict)
    bar_items: tuple[int, ...] = ()


def _check_sequence(seq) -> list[int]:
    seq = [int(v) for v in seq]
    if len(seq) < 1:
        raise ValueError("need at least one sequence value (n >= 2)")
    if any(v < 1 for v in seq):
        raise ValueError("sequence values must be >= 1")
    return seq


def _build(seq, construction: str):
    seq = _check_sequence(seq)
    n = len(seq) + 1
    a0 = 2 * n
    M = 2 * (max(seq) + n)
    if any(2 * v >= M for v in seq):  # pragma: no cover - excluded by the choice of M
        raise ValueError("sequence value too large for M")
    small = [a0 * v + 2 * i for i, v in enumerate(seq, start=1)]
    bar = [a0 * (M - v) - 2 * i - 1 for i, v in enumerate(seq, start=1)]
    inst = Instance.from_items([a0, *small, *bar])
    assert inst.a0 == a0 and len(inst) == 2 * n - 1
    prov = {"sequence": seq, "M": M, "construction": construction}
    return inst, a0, M, prov, tuple(bar)


def subadd_to_uss(seq) -> ReductionInstance:
    """Subset-sum instance for the positive sequence ``seq = a[1..n-1]``."""
    inst, a0, M, prov, bar = _build(seq, "subadd_to_uss")
    return ReductionInstance(inst, a0 * (M - 1) - 1, None, prov, bar)


def subadd_to_frobenius(seq) -> ReductionInstance:
    """Same items as :func:`subadd_to_uss`, compared against ``a_0 M - 1``."""
    inst, a0, M, prov, bar = _build(seq, "subadd_to_frobenius")
    return ReductionInstance(inst, None, a0 * M - 1, prov, bar)


def with_zero_entry(seq) -> list[int]:
    """The full sequence ``a[0..n-1]`` with ``a[0] = 0`` prepended."""
    return [0, *(int(v) for v in seq)]


def sequence_violated(seq) -> bool:
    return is_mod_subadditive(with_zero_entry(seq)) is not None


def detectable_violation(seq) -> bool:
    """Whether the constructed target is actually reachable.

    A pair ``i <= j`` with ``k = (i + j) mod n`` and deficit
    ``d = a[k] - a[i] - a[j]`` yields ``a-bar_k + a_i + a_j`` equal to
    ``a_0 (M - d) - 1`` when ``i + j < n`` and ``a_0 (M + 1 - d) - 1`` when the
    indices wrap.  The target ``a_0 (M - 1) - 1`` is therefore reached from
    plain violations (``d >= 1``) but only from wrapping ones with ``d >= 2``.
    """
    a = with_zero_entry(seq)
    n = len(a)
    for i in range(n):
        for j in range(i, n):
            d = a[(i + j) % n] - a[i] - a[j]
            if d >= (2 if i + j >= n else 1):
                return True
    return False


@dataclass(frozen=True)
class IffCheck:
    sequence: tuple[int, ...]
    violated: bool
    observed: bool
    value: int | None = None

    @property
    def ok(self) -> bool:
        return self.violated == self.observed


def check_uss_iff(seq, decide=uss_decide) -> IffCheck:
    """Violation of ``seq`` against feasibility of the constructed target."""
    red = subadd_to_uss(seq)
    feasible = bool(decide(red.instance, red.target))
    return IffCheck(tuple(seq), sequence_violated(seq), feasible)


def check_frobenius_iff(seq, frobenius_fn=frobenius, threshold: str = "stated") -> IffCheck:
    """Violation of ``seq`` against ``F(constructed) < threshold``.

    ``threshold="stated"`` compares with ``a_0 M - 1``; ``"target"`` compares
    with the subset-sum target ``a_0 (M - 1) - 1``.  Without a violation the
    Frobenius number equals that target exactly, so only the second
    comparison separates the two cases.
    """
    red = subadd_to_frobenius(seq)
    F = int(frobenius_fn(red.instance))
    if threshold == "stated":
        bound = red.threshold
    elif threshold == "target":
        bound = red.threshold - red.instance.a0
    else:
        raise ValueError(f"unknown threshold {threshold!r}")
    return IffCheck(tuple(seq), sequence_violated(seq), F < bound, F)


def bar_item_count(seq) -> int | None:
    """Number of ``a-bar`` items in a reconstructed witness, ``None`` if infeasible."""
    red = subadd_to_uss(seq)
    x = reconstruct_solution(red.instance, red.target)
    if x is None:
        return None
    bar = set(red.bar_items)
    return sum(m for a, m in zip(red.instance.items, x.multiplicities) if a in bar)


def pad_instance(inst: Instance, t: int) -> Instance:
    """Append ``R a_0 + (2**i mod a_0)`` for ``0 <= i <= floor(log2 a_0)``.

    ``R`` is the least integer with ``R a_0 > t``, so every new item exceeds
    ``t``.
    """
    if inst.a0 < 2:
        raise ValueError("padding needs a_0 >= 2")
    if inst.an > t:
        raise ValueError(f"largest item {inst.an} exceeds the target {t}")
    a0 = inst.a0
    R = t // a0 + 1
    extra = [R * a0 + pow(2, i, a0) for i in range(a0.bit_length())]
    return Instance.from_items([*inst.items, *extra])


def padded_frobenius_bound(t: int) -> int:
    return 3 * t * (t.bit_length())  # 3 t (floor(log2 t) + 1)


@dataclass
class FrobeniusComparison:
    feasible: bool
    base_frobenius: int
    used_full_instance: bool
    early_exit: bool
    without_extra: int | None = None
    with_extra: int | None = None
    frobenius_calls: int = 0


def compare_frobenius(inst: Instance, t: int, frobenius_fn=frobenius) -> FrobeniusComparison:
    """Decide feasibility of ``t`` from Frobenius numbers of doubled instances.

    The base Frobenius number is taken over ``a_1..a_n``; when those items
    share a divisor (so that number is infinite) the full instance is used
    instead.  Items ``2 a_i`` and ``2 F + 1`` give an instance with Frobenius
    number ``F1``; adding ``F1 - 2 t`` lowers it iff ``t`` is feasible.
    """
    if t < 0:
        raise ValueError("target must be non-negative")
    if inst.a0 == 1:
        return FrobeniusComparison(True, -1, False, True)
    rest = inst.items[1:]
    use_full = not rest or reduce(math.gcd, rest) != 1
    base = int(frobenius_fn(inst if use_full else Instance(rest)))
    calls = 1
    if t > base:
        return FrobeniusComparison(True, base, use_full, True, frobenius_calls=calls)
    doubled = [2 * a for a in inst.items] + [2 * base + 1]
    f1 = int(frobenius_fn(Instance.from_items(doubled)))
    extra = f1 - 2 * t
    if extra <= 0:
        raise InstanceError(f"degenerate extra item {extra} for target {t}")
    f2 = int(frobenius_fn(Instance.from_items(doubled + [extra])))
    calls += 2
    if use_full and f1 != 4 * base + 1:
        log.warning("F(doubled) = %d differs from 4F + 1 = %d", f1, 4 * base + 1)
    return FrobeniusComparison(f2 < f1, base, use_full, False, f1, f2, calls)


def uss_via_frobenius(inst: Instance, t: int, frobenius_fn=frobenius) -> bool:
    return compare_frobenius(inst, t, frobenius_fn).feasible
