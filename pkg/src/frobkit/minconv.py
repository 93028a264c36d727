"""(min, +) convolution, its modular variant and the residue-table closure.

Cost sequences are int64 numpy arrays.  ``INF`` and ``NEG_INF`` are reserved
sentinels: they absorb under addition (``INF`` wins over ``NEG_INF``) and
compare above/below every finite value.  Finite entries must stay strictly
inside ``(-2**61, 2**61)`` so sums of two finite entries never reach a
sentinel.
"""
from __future__ import annotations

import math

import numpy as np

from .instance import GcdError, Instance, ResidueTable

INF = 2**62
NEG_INF = -(2**62)
FINITE_LIMIT = 2**61

_INF_TOKENS = {"inf": INF, "+inf": INF, "infinity": INF, "-inf": NEG_INF, "-infinity": NEG_INF}


def as_costseq(values) -> np.ndarray:
    """Convert ``values`` to a cost sequence.

    Accepts integers, ``math.inf``/``-math.inf`` and the strings ``inf``/``-inf``.
    """
    if isinstance(values, np.ndarray) and values.dtype == np.int64:
        out = values.copy()
    else:
        out = np.empty(len(values), dtype=np.int64)
        for k, v in enumerate(values):
            if isinstance(v, str):
                key = v.strip().lower()
                out[k] = _INF_TOKENS[key] if key in _INF_TOKENS else int(key)
            elif isinstance(v, float) and math.isinf(v):
                out[k] = INF if v > 0 else NEG_INF
            else:
                if int(v) != v:
                    raise ValueError(f"{v!r} is not an integer")
                out[k] = int(v)
    finite = (out != INF) & (out != NEG_INF)
    if np.any(np.abs(out[finite]) >= FINITE_LIMIT):
        raise ValueError("finite cost values must lie strictly inside (-2**61, 2**61)")
    return out


def format_costseq(seq) -> list:
    """Plain list with sentinels rendered as ``"inf"``/``"-inf"``."""
    return ["inf" if v == INF else "-inf" if v == NEG_INF else int(v) for v in seq]


def sat_add(x, y):
    """Sentinel-aware addition; ``INF + NEG_INF`` is ``INF``."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    with np.errstate(over="ignore"):
        raw = x + y
    return np.where(
        (x == INF) | (y == INF), INF, np.where((x == NEG_INF) | (y == NEG_INF), NEG_INF, raw)
    )


def min_plus_convolve(a, b) -> np.ndarray:
    """``c[k] = min_{i+j=k} a[i] + b[j]`` by the quadratic algorithm."""
    a = as_costseq(a)
    b = as_costseq(b)
    if a.size == 0 or b.size == 0:
        raise ValueError("sequences must be non-empty")
    if a.size > b.size:
        a, b = b, a
    m = b.size
    c = np.full(a.size + m - 1, INF, dtype=np.int64)
    for i, ai in enumerate(a):
        if ai == INF:
            continue
        window = c[i : i + m]
        np.minimum(window, sat_add(ai, b), out=window)
    return c


def mod_min_convolve(a, b, n: int | None = None, convolve=min_plus_convolve) -> np.ndarray:
    """``c[k] = min_{i+j = k (mod n)} a[i] + b[j]``.

    Both inputs are repeated twice, convolved with ``convolve``, and the two
    halves of the result folded together.
    """
    a = as_costseq(a)
    b = as_costseq(b)
    if n is None:
        n = a.size
    if a.size != n or b.size != n:
        raise ValueError(f"both sequences must have length {n}")
    cbar = np.asarray(convolve(np.tile(a, 2), np.tile(b, 2)), dtype=np.int64)
    return np.minimum(cbar[:n], cbar[n : 2 * n])


def closure_budget(a0: int) -> int:
    """``ceil(log2 log2 a0) + 1``, computed exactly on integers."""
    r = 0
    while 2 ** (2**r) < a0:
        r += 1
    return r + 1


def seed_sequence(inst: Instance) -> np.ndarray:
    """Per residue mod ``a_0`` the least value ``2**j * a_i`` (``i >= 1``,
    ``j <= floor(log2 a_0)``), with the empty sum at residue 0."""
    a0 = inst.a0
    seq = np.full(a0, INF, dtype=np.int64)
    jmax = a0.bit_length() - 1
    for a in inst.items[1:]:
        v = a
        for _ in range(jmax + 1):
            r = v % a0
            if v < seq[r]:
                seq[r] = v
            v *= 2
    seq[0] = 0
    return seq


def mod_closure(seq, max_calls: int | None = None, convolve=min_plus_convolve):
    """Square ``seq`` under ``mod_min_convolve`` until it stops changing.

    Returns ``(closure, calls)``.  At most ``max_calls`` convolutions are made
    when given.
    """
    cur = as_costseq(seq)
    n = cur.size
    calls = 0
    while max_calls is None or calls < max_calls:
        nxt = mod_min_convolve(cur, cur, n, convolve=convolve)
        calls += 1
        if np.array_equal(nxt, cur):
            break
        cur = nxt
    return cur, calls


def alltargets_minconv(inst: Instance, convolve=min_plus_convolve):
    """Residue table as the transitive mod-``a_0`` closure of :func:`seed_sequence`.

    Returns ``(table, conv_calls)``; ``conv_calls`` never exceeds
    :func:`closure_budget`.  ``convolve`` may be any (min, +) convolution.
    """
    if not isinstance(inst, Instance):
        inst = Instance.from_items(inst)
    if inst.a0 == 1:
        return ResidueTable(1, [0]), 0
    closed, calls = mod_closure(
        seed_sequence(inst), max_calls=closure_budget(inst.a0), convolve=convolve
    )
    if np.any(closed == INF):
        # unreachable residue class: only possible with a shared divisor
        raise GcdError(math.gcd(*inst.items))
    return ResidueTable(inst.a0, closed), calls


def is_subadditive(seq):
    """First pair ``(i, j)``, ``i <= j``, ``i + j < n`` with
    ``a[i] + a[j] < a[i + j]``, or ``None`` if there is none."""
    a = as_costseq(seq)
    n = a.size
    for i in range(n // 2 + n % 2):
        lhs = sat_add(a[i], a[i : n - i])
        hit = np.flatnonzero(lhs < a[2 * i : n])
        if hit.size:
            return i, i + int(hit[0])
    return None


def is_mod_subadditive(seq):
    """First pair ``(i, j)``, ``i <= j``, with ``a[i] + a[j] < a[(i + j) % n]``, or ``None``."""
    a = as_costseq(seq)
    n = a.size
    for i in range(n):
        js = np.arange(i, n)
        hit = np.flatnonzero(sat_add(a[i], a[i:]) < a[(i + js) % n])
        if hit.size:
            return i, i + int(hit[0])
    return None


def mod_to_plain_unrolling(seq) -> np.ndarray:
    """``b[i] = a[i mod n]`` for ``i < 2n``: plain violations of ``b`` are
    exactly the modular violations of ``a``."""
    return np.tile(as_costseq(seq), 2)


def plain_to_mod_padding(seq) -> np.ndarray:
    """``seq`` followed by ``len(seq)`` copies of ``NEG_INF``.

    Sums landing in the padded half compare against ``NEG_INF`` and so never
    count as violations under :func:`is_subadditive`.  Pairs that wrap around
    under :func:`is_mod_subadditive` do pick up the sentinel on the left-hand
    side, so only the plain tester preserves the violation set.
    """
    a = as_costseq(seq)
    if a.size == 0:
        raise ValueError("sequence must be non-empty")
    return np.concatenate([a, np.full(a.size, NEG_INF, dtype=np.int64)])
