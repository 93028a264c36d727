"""Problem instances, residue tables and solution vectors.

An :class:`Instance` is a strictly ascending tuple of coprime positive item
sizes ``a_0 < a_1 < ... < a_n``.  Everything else in the package takes one.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

import numpy as np

#: Largest accepted item size; keeps every intermediate sum inside int64.
MAX_ITEM = 2**40


class InstanceError(ValueError):
    """Raised for malformed or invalid instance data."""


class GcdError(InstanceError):
    """The item sizes share a common divisor greater than one."""

    def __init__(self, gcd: int):
        super().__init__(f"gcd of item sizes is {gcd}, expected 1")
        self.gcd = gcd


@dataclass(frozen=True)
class Instance:
    items: tuple[int, ...]

    def __post_init__(self):
        items = self.items
        if len(items) == 0:
            raise InstanceError("instance needs at least one item")
        for a in items:
            if not isinstance(a, (int, np.integer)) or isinstance(a, bool):
                raise InstanceError(f"item {a!r} is not an integer")
            if a < 1:
                raise InstanceError(f"item {a} is not positive")
            if a > MAX_ITEM:
                raise InstanceError(f"item {a} exceeds the cap 2**40")
        for x, y in zip(items, items[1:]):
            if x >= y:
                raise InstanceError("items must be strictly ascending")
        g = reduce(math.gcd, items)
        if g != 1:
            raise GcdError(g)
        object.__setattr__(self, "items", tuple(int(a) for a in items))

    @classmethod
    def from_items(cls, items) -> "Instance":
        """Sort and deduplicate ``items``, then validate."""
        items = list(items)
        for a in items:
            if not isinstance(a, (int, np.integer)) or isinstance(a, bool):
                raise InstanceError(f"item {a!r} is not an integer")
        return cls(tuple(sorted(set(int(a) for a in items))))

    @property
    def a0(self) -> int:
        return self.items[0]

    @property
    def an(self) -> int:
        return self.items[-1]

    @property
    def n(self) -> int:
        """Index of the largest item (the instance has ``n + 1`` items)."""
        return len(self.items) - 1

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def serialize(self) -> str:
        return " ".join(str(a) for a in self.items)

    def __str__(self):
        return self.serialize()


@dataclass(frozen=True, eq=False)
class ResidueTable:
    """Minimal feasible target for every residue class modulo ``a_0``.

    ``entries[i]`` is the smallest feasible ``t`` with ``t % modulus == i``.
    The array is read-only.
    """

    modulus: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.int64)
        if self.modulus < 1 or entries.shape != (self.modulus,):
            raise ValueError(
                f"expected {self.modulus} entries, got shape {entries.shape}"
            )
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    def __eq__(self, other):
        if not isinstance(other, ResidueTable):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(
            self.entries, other.entries
        )

    def __hash__(self):
        return hash((self.modulus, self.entries.tobytes()))

    def __repr__(self):
        return f"ResidueTable(modulus={self.modulus}, entries={self.entries.tolist()})"

    def __getitem__(self, i):
        return int(self.entries[i])

    def tolist(self) -> list[int]:
        return self.entries.tolist()

    @property
    def frobenius(self) -> int:
        """Largest infeasible target, ``-1`` when the modulus is 1."""
        if self.modulus == 1:
            return -1
        return int(self.entries.max()) - self.modulus

    def is_feasible(self, t: int) -> bool:
        if t < 0:
            raise ValueError("target must be non-negative")
        return t >= int(self.entries[t % self.modulus])

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "residue_table": self.tolist()}

    @classmethod
    def from_json(cls, data) -> "ResidueTable":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return cls(int(data["modulus"]), data["residue_table"])


@dataclass(frozen=True)
class Solution:
    """Multiplicity vector ``x`` with one entry per item."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.multiplicities):
            raise ValueError("multiplicities must be non-negative")
        object.__setattr__(
            self, "multiplicities", tuple(int(x) for x in self.multiplicities)
        )

    def total(self, inst: Instance) -> int:
        if len(inst) != len(self.multiplicities):
            raise ValueError("solution length does not match the instance")
        return sum(x * a for x, a in zip(self.multiplicities, inst.items))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.multiplicities) if x)

    def tolist(self) -> list[int]:
        return list(self.multiplicities)


def _tokens_to_ints(tokens) -> list[int]:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise InstanceError(f"token {tok!r} is not an integer") from None
    return out


def parse_instance(text: str) -> Instance:
    """Parse whitespace-separated item sizes.

    Items are sorted and deduplicated.  Raises :class:`InstanceError` for
    empty input, non-integer tokens or non-positive items, and
    :class:`GcdError` when the items are not coprime.
    """
    tokens = text.split()
    if not tokens:
        raise InstanceError("empty instance")
    return Instance.from_items(_tokens_to_ints(tokens))


class _InfeasibleByGcd:
    def __repr__(self):
        return "INFEASIBLE_BY_GCD"

    def __bool__(self):
        return False


#: Returned by :func:`normalize_gcd` when the target is not a multiple of the gcd.
INFEASIBLE_BY_GCD = _InfeasibleByGcd()


def normalize_gcd(items, t: int | None = None):
    """Divide ``items`` (and ``t``) by their common gcd.

    Returns ``(instance, divisor, scaled_t)``.  When ``t`` is given but not
    divisible by the gcd the target can never be reached, and the sentinel
    :data:`INFEASIBLE_BY_GCD` is returned instead of a tuple.
    """
    items = _tokens_to_ints(items)
    if not items:
        raise InstanceError("empty instance")
    if any(a < 1 for a in items):
        raise InstanceError("items must be positive")
    g = reduce(math.gcd, items)
    if t is not None and t % g:
        return INFEASIBLE_BY_GCD
    inst = Instance.from_items(a // g for a in items)
    return inst, g, (None if t is None else t // g)


def random_instance(n: int, a_max: int, seed: int) -> Instance:
    """Draw ``n + 1`` distinct coprime items from ``[1, a_max]``.

    Deterministic in ``seed``; non-coprime draws are rejected and redrawn.
    """
    if n < 1 or a_max < 2:
        raise ValueError("need n >= 1 and a_max >= 2")
    if n + 1 > a_max:
        raise ValueError(f"cannot draw {n + 1} distinct items from [1, {a_max}]")
    rng = np.random.default_rng(seed)
    for _ in range(10_000):
        items = rng.choice(a_max, size=n + 1, replace=False) + 1
        if reduce(math.gcd, items.tolist()) == 1:
            return Instance.from_items(items.tolist())
    raise RuntimeError("no coprime draw found")  # pragma: no cover


def erdos_graham_bound(inst: Instance) -> int:
    """Upper bound ``floor(2 a_{n-1} a_n / (n + 1)) - a_n`` on the Frobenius number.

    With ``a_0 = 1`` every target is feasible and the bound degenerates to
    the Frobenius sentinel ``-1``.
    """
    if inst.a0 == 1:
        return -1
    n = inst.n
    return 2 * inst.items[-2] * inst.an // (n + 1) - inst.an


def format_instance_file(inst: Instance, t: int | None = None) -> str:
    text = inst.serialize() + "\n"
    if t is not None:
        text += f"t {t}\n"
    return text


def parse_instance_file(text: str, normalize: bool = False):
    """Parse the two-line instance file format.

    The first line holds the items, an optional second line ``t <int>`` the
    target.  Returns ``(items_or_instance, t)``; with ``normalize=True`` the
    raw integer list is returned so callers can apply :func:`normalize_gcd`.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InstanceError("empty instance file")
    t = None
    if len(lines) > 1:
        head, *rest = lines[1].split()
        if head != "t" or len(rest) != 1:
            raise InstanceError(f"bad target line {lines[1]!r}")
        (t,) = _tokens_to_ints(rest)
    if len(lines) > 2:
        raise InstanceError("instance file has more than two lines")
    if normalize:
        items = _tokens_to_ints(lines[0].split())
        if not items:
            raise InstanceError("empty instance")
        return items, t
    return parse_instance(lines[0]), t


def read_instance_file(path, normalize: bool = False):
    return parse_instance_file(Path(path).read_text(), normalize=normalize)
