"""Induced matchings in graphs of bounded maximum degree."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, max_degree
from .matching import InducedMatching, is_induced_matching
from .exact import nu_s_exact, nu_s_bruteforce
from .constructive import RunConfig, run
from .baseline import greedy_induced_matching
from .bounds import bound_B, theorem_guarantee, trivial_guarantee, conjecture_check

__all__ = [
    "Graph",
    "GraphError",
    "InducedMatching",
    "RunConfig",
    "bound_B",
    "conjecture_check",
    "greedy_induced_matching",
    "is_induced_matching",
    "max_degree",
    "nu_s_bruteforce",
    "nu_s_exact",
    "run",
    "theorem_guarantee",
    "trivial_guarantee",
]
