"""Uniform entry points over the four residue-table engines."""
from __future__ import annotations

from .instance import INFEASIBLE_BY_GCD, Instance, ResidueTable, normalize_gcd
from .minconv import alltargets_minconv
from .oracle import bellman_feasible, oracle_residue_table, reconstruct_solution
from .sumset import SolverStats, alltargets_sumset, frobenius, round_robin, uss_decide

ENGINES = ("sumset", "minconv", "roundrobin", "oracle")


def _check(algo):
    if algo not in ENGINES:
        raise ValueError(f"unknown engine {algo!r}; choose from {', '.join(ENGINES)}")


def residue_table(inst: Instance, algo: str = "sumset") -> ResidueTable:
    _check(algo)
    if algo == "sumset":
        return alltargets_sumset(inst)
    if algo == "minconv":
        return alltargets_minconv(inst)[0]
    if algo == "roundrobin":
        return round_robin(inst)
    return oracle_residue_table(inst)


def frobenius_number(inst: Instance, algo: str = "sumset",
                     stats: SolverStats | None = None) -> int:
    _check(algo)
    if algo == "sumset":
        return frobenius(inst, stats)
    return residue_table(inst, algo).frobenius


def subset_sum(items, t: int, algo: str = "sumset", witness: bool = False) -> dict:
    """Feasibility of ``t`` for arbitrary positive items (the gcd is divided out).

    Returns ``{"feasible": bool}`` plus ``"witness"`` (multiplicities of the
    sorted, deduplicated items, or ``None``) when requested.
    """
    _check(algo)
    if t < 0:
        raise ValueError("target must be non-negative")
    norm = normalize_gcd(items, t)
    if norm is INFEASIBLE_BY_GCD:
        out = {"feasible": False}
        if witness:
            out["witness"] = None
        return out
    inst, _, target = norm
    if algo == "sumset":
        feasible = uss_decide(inst, target)
    elif algo == "oracle":
        feasible = bellman_feasible(inst, target)
    else:
        feasible = residue_table(inst, algo).is_feasible(target)
    out = {"feasible": bool(feasible)}
    if witness:
        x = reconstruct_solution(inst, target) if feasible else None
        out["witness"] = None if x is None else x.tolist()
    return out
