"""Induced-matching validation and the edge conflict structure.

Two edges conflict when they share an endpoint or some edge of the graph
joins them. Equivalently, ``xy`` conflicts with ``uv`` iff ``x`` or ``y``
lies in ``N[u] | N[v]``. Induced matchings are exactly the independent
sets of the conflict graph (the square of the line graph).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, closed_union

Edge = tuple[int, int]


def norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class InducedMatching:
    """A set of edges claimed to be an induced matching.

    Membership is not checked at construction; use :func:`is_induced_matching`.
    """

    edges: frozenset[Edge]

    @classmethod
    def of(cls, edges: Iterable[Iterable[int]]) -> "InducedMatching":
        return cls(frozenset(norm_edge(e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def check_induced_matching(g: Graph, m: InducedMatching | Iterable[Iterable[int]]) -> tuple[bool, str | None]:
    """Validate ``m`` against ``g``; return ``(ok, first violation)``.

    The scan is lexicographic: first non-edges, then shared endpoints, then
    joining edges, so the reported violation is deterministic.
    """
    edges = m.sorted_edges() if isinstance(m, InducedMatching) else sorted({norm_edge(e) for e in m})
    for u, v in edges:
        if not g.has_edge(u, v):
            return False, f"({u}, {v}) is not an edge of the graph"
    owner: dict[int, Edge] = {}
    for e in edges:
        for x in e:
            if x in owner:
                return False, f"edges {owner[x]} and {e} share vertex {x}"
            owner[x] = e
    adj = g.adjacency
    for x in sorted(owner):
        for y in sorted(adj[x]):
            if y > x and y in owner and owner[y] != owner[x]:
                return False, f"edge ({x}, {y}) joins {owner[x]} and {owner[y]}"
    return True, None


def is_induced_matching(g: Graph, m: InducedMatching | Iterable[Iterable[int]]) -> bool:
    return check_induced_matching(g, m)[0]


def conflict_edges(g: Graph, e: Iterable[int]) -> frozenset[Edge]:
    """All edges within distance 1 of ``e``, including ``e``."""
    u, v = norm_edge(e)
    s = closed_union(g, u, v)
    adj = g.adjacency
    return frozenset(norm_edge((x, y)) for x in s for y in adj[x])


def conflict_graph(g: Graph) -> tuple[Graph, list[Edge]]:
    """Square of the line graph of ``g``.

    Returns the conflict graph together with its vertex labels: vertex ``i``
    stands for ``edges[i]``, edges in lexicographic order.
    """
    edges = list(g.edges())
    adj = g.adjacency
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    cadj: list[frozenset[int]] = []
    for i, (u, v) in enumerate(edges):
        near: set[int] = set()
        for x in adj[u] | adj[v]:
            near.update(incident[x])
        near.discard(i)
        cadj.append(frozenset(near))
    return Graph._from_adjacency(cadj), edges


def max_conflicts(delta: int) -> int:
    """Upper bound ``2*delta^2 - 2*delta + 1`` on ``|conflict_edges(g, e)|``."""
    return 2 * delta * delta - 2 * delta + 1 if delta > 0 else 0


__all__ = [
    "Edge",
    "GraphError",
    "InducedMatching",
    "check_induced_matching",
    "conflict_edges",
    "conflict_graph",
    "is_induced_matching",
    "max_conflicts",
    "norm_edge",
]
