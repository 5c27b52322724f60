"""Cached graph populations shared by the test modules."""

from functools import lru_cache

from domcycle.enumeration import generate_levels
from domcycle.graph import is_two_connected


@lru_cache(maxsize=None)
def _levels(n_max, connected):
    return {n: reps for n, reps in generate_levels(n_max, connected=connected)}


def graphs_of_order(n, kind="connected"):
    """One graph per isomorphism class (certificate forms, not minimal codes)."""
    reps = _levels(max(n, 8), kind != "all")[n]
    if kind == "two_connected":
        return [g for g in reps if is_two_connected(g)]
    return list(reps)
