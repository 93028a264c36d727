"""Unbounded subset sum, Frobenius numbers and residue tables.

Fast engines (interval sumsets, mod-(min, +) closure, round robin) next to
brute-force oracles and the reduction constructions used to cross-check them.
"""
from .instance import (
    INFEASIBLE_BY_GCD,
    GcdError,
    Instance,
    InstanceError,
    ResidueTable,
    Solution,
    erdos_graham_bound,
    normalize_gcd,
    parse_instance,
    random_instance,
)
from .minconv import (
    INF,
    NEG_INF,
    alltargets_minconv,
    is_mod_subadditive,
    is_subadditive,
    min_plus_convolve,
    mod_min_convolve,
)
from .oracle import (
    bellman_feasible,
    check_structure_bound,
    feasible_via_table,
    lexmax_solution,
    oracle_frobenius,
    oracle_residue_table,
    reconstruct_solution,
)
from .sumset import (
    FeasibilitySet,
    advance,
    alltargets_sumset,
    base_interval,
    boolean_convolve,
    efficient_binary_search,
    frobenius,
    round_robin,
    uss_decide,
)
from .engines import ENGINES, frobenius_number, residue_table, subset_sum

__version__ = "0.1.0"
