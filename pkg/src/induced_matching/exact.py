"""Exact strong matching number via maximum independent set search.

The search runs on the conflict graph with vertex sets held as Python int
bitmasks. Branching is on a maximum-degree vertex of the residual graph
(include first, then exclude); pruning uses a greedy clique cover of the
residual candidates. Everything is deterministic: ties go to the lowest
index.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .graph import Graph
from .matching import InducedMatching, conflict_graph, is_induced_matching

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "INDUCED_MATCHING_BUDGET"
BRUTEFORCE_MAX_EDGES = 20

EXACT = "exact"
BUDGET_EXHAUSTED = "budget-exhausted"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: InducedMatching
    status: str
    nodes_explored: int

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_size(cand: int, adj: list[int]) -> int:
    count = 0
    while cand:
        low = cand & -cand
        cand ^= low
        clique = cand & adj[low.bit_length() - 1]
        while clique:
            w = clique & -clique
            cand &= ~w
            clique &= adj[w.bit_length() - 1]
        count += 1
    return count


def max_independent_set(adj: list[int], budget: int) -> tuple[list[int], bool, int]:
    """Maximum independent set of a bitmask graph.

    Returns ``(vertices, completed, nodes)``; ``completed`` is False when the
    node budget ran out, in which case ``vertices`` is the best set found.
    """
    n = len(adj)
    best: list[int] = []
    # Seed with a min-degree greedy solution so pruning starts early.
    cand = (1 << n) - 1
    while cand:
        v = min(_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), x))
        best.append(v)
        cand &= ~(adj[v] | (1 << v))

    nodes = 0
    stack: list[tuple[int, tuple[int, ...]]] = [((1 << n) - 1, ())]
    while stack:
        if nodes >= budget:
            return sorted(best), False, nodes
        cand, chosen = stack.pop()
        nodes += 1
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            continue
        if len(chosen) + _clique_cover_size(cand, adj) <= len(best):
            continue
        v = max(_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
        bit = 1 << v
        # LIFO: push exclude first so include is explored first.
        stack.append((cand & ~bit, chosen))
        stack.append((cand & ~(adj[v] | bit), chosen + (v,)))
    return sorted(best), True, nodes


def nu_s_exact(g: Graph, budget: int | None = None) -> ExactResult:
    """Strong matching number of ``g`` with a witness matching.

    ``status`` is ``"exact"`` when the search finished within ``budget``
    branch nodes, otherwise ``"budget-exhausted"`` and ``value`` is only a
    lower bound (the witness is still a valid induced matching).
    """
    budget = default_budget() if budget is None else budget
    cg, labels = conflict_graph(g)
    adj = [sum(1 << w for w in a) for a in cg.adjacency]
    chosen, completed, nodes = max_independent_set(adj, budget)
    witness = InducedMatching.of(labels[i] for i in chosen)
    return ExactResult(len(witness), witness, EXACT if completed else BUDGET_EXHAUSTED, nodes)


def nu_s_bruteforce(g: Graph) -> int:
    """Largest edge subset passing :func:`is_induced_matching`, ``m <= 20``.

    Walks the subset lattice edge by edge and skips supersets of rejected
    subsets (any violation in a subset persists in its supersets), checking
    every candidate against the definition directly.
    """
    if g.m > BRUTEFORCE_MAX_EDGES:
        raise ValueError(f"brute force limited to {BRUTEFORCE_MAX_EDGES} edges, got {g.m}")
    edges = list(g.edges())
    best = 0

    def walk(i: int, current: list) -> None:
        nonlocal best
        best = max(best, len(current))
        for j in range(i, len(edges)):
            trial = current + [edges[j]]
            if is_induced_matching(g, trial):
                walk(j + 1, trial)

    walk(0, [])
    return best
