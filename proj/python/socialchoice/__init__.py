"""Exact social choice engine.

Thin Python surface over the C++ core: anonymous weighted profiles with exact
rational arithmetic, pairwise-majority and positional dominance, the rule
registry (plurality through schwartz), exponential-family permutation
processes, and the efficiency/stability/compatibility checkers.
"""

from socialchoice._core import (
    DominanceRelation,
    Profile,
    Ranking,
    check_compatibility,
    check_efficiency,
    check_stability,
    default_density_grid,
    density_swap_check,
    exhaustive_search,
    fixture,
    fixture_names,
    has_condorcet_cycle,
    is_total_preorder,
    param_dominates,
    parse_profile,
    plackett_luce_exact,
    pm_dominates,
    pm_relation,
    pos_dominates,
    pos_relation,
    positional_cumulative,
    process_dominance,
    rule_names,
    sample_profile,
    schwartz_set,
    schwartz_set_bruteforce,
    support,
    weak_condorcet_winners,
    winners,
)

__all__ = [
    "DominanceRelation",
    "Profile",
    "Ranking",
    "check_compatibility",
    "check_efficiency",
    "check_stability",
    "default_density_grid",
    "density_swap_check",
    "exhaustive_search",
    "fixture",
    "fixture_names",
    "has_condorcet_cycle",
    "is_total_preorder",
    "param_dominates",
    "parse_profile",
    "plackett_luce_exact",
    "pm_dominates",
    "pm_relation",
    "pos_dominates",
    "pos_relation",
    "positional_cumulative",
    "process_dominance",
    "rule_names",
    "sample_profile",
    "schwartz_set",
    "schwartz_set_bruteforce",
    "support",
    "weak_condorcet_winners",
    "winners",
]
