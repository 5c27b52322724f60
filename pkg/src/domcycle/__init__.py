"""Exhaustive checks of dominating-cycle results on small graphs."""

from .catalog import ForbiddenCatalog, catalog_build, classify_pair, contains_induced, family_leq, is_family_free
from .cycles import (
    OrientedCycle,
    circumference,
    has_dominating_cycle,
    has_dominating_longest_cycle,
    is_dominating,
    longest_cycles,
    select_extremal_cycle,
)
from .graph import Graph, components, induced_subgraph, is_connected, is_independent, is_two_connected
from .graph6 import graph6_decode, graph6_encode, read_stream

__version__ = "0.1.0"

__all__ = [
    "ForbiddenCatalog",
    "Graph",
    "OrientedCycle",
    "catalog_build",
    "circumference",
    "classify_pair",
    "components",
    "contains_induced",
    "family_leq",
    "graph6_decode",
    "graph6_encode",
    "has_dominating_cycle",
    "has_dominating_longest_cycle",
    "induced_subgraph",
    "is_connected",
    "is_dominating",
    "is_family_free",
    "is_independent",
    "is_two_connected",
    "longest_cycles",
    "read_stream",
    "select_extremal_cycle",
]
