"""Greedy induced matchings with the trivial ``m / (2D^2 - 2D + 1)`` guarantee."""

from __future__ import annotations

import heapq

from .graph import Graph
from .matching import InducedMatching, conflict_graph

FIRST_EDGE = "first-edge"
MIN_CONFLICT = "min-conflict"
POLICIES = (FIRST_EDGE, MIN_CONFLICT)


def greedy_induced_matching(g: Graph, policy: str = FIRST_EDGE) -> InducedMatching:
    """Pick an edge, discard everything it conflicts with, repeat.

    ``first-edge`` always takes the lexicographically first remaining edge.
    ``min-conflict`` takes the edge with the fewest remaining conflicts
    (ties lexicographic) and needs the materialised conflict graph, so it is
    meant for small and medium inputs.
    """
    if policy == FIRST_EDGE:
        return _greedy_first(g)
    if policy == MIN_CONFLICT:
        return _greedy_min_conflict(g)
    raise ValueError(f"unknown greedy policy {policy!r}; choose from {POLICIES}")


def _greedy_first(g: Graph) -> InducedMatching:
    # An edge conflicts with uv iff it touches N[u] | N[v], so dropping the
    # conflicts of uv is the same as deleting those vertices.
    adj = g.adjacency
    dead = bytearray(g.n)
    chosen = []
    for u in range(g.n):
        if dead[u]:
            continue
        live = [w for w in adj[u] if w > u and not dead[w]]
        if not live:
            continue
        v = min(live)
        chosen.append((u, v))
        for x in adj[u] | adj[v]:
            dead[x] = 1
    return InducedMatching.of(chosen)


def _greedy_min_conflict(g: Graph) -> InducedMatching:
    cg, labels = conflict_graph(g)
    cadj = cg.adjacency
    remaining = list(cg.degrees)
    alive = bytearray(b"\x01") * cg.n
    heap = [(remaining[i], i) for i in range(cg.n)]
    heapq.heapify(heap)
    chosen = []
    while heap:
        d, i = heapq.heappop(heap)
        if not alive[i] or d != remaining[i]:
            continue
        chosen.append(labels[i])
        doomed = [j for j in cadj[i] if alive[j]]
        doomed.append(i)
        for j in doomed:
            alive[j] = 0
        for j in doomed:
            for k in cadj[j]:
                if alive[k]:
                    remaining[k] -= 1
                    heapq.heappush(heap, (remaining[k], k))
    return InducedMatching.of(chosen)
