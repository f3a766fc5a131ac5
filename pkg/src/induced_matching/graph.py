"""Immutable simple undirected graphs on dense integer vertex ids.

Vertices are always ``0..n-1``. Every operation that deletes vertices
returns a fresh, renumbered graph; the ``*_mapped`` variants also return
the ``new -> old`` id table so results can be lifted back.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

ISOMORPHISM_CAP = 12


class GraphError(ValueError):
    """Raised on invalid vertices, non-edges or malformed graph input."""


def _share_singletons(adj: Sequence[frozenset[int]]) -> tuple[frozenset[int], ...]:
    # Pendant-heavy graphs hold millions of one-element sets; equal ones are
    # stored once.
    pool: dict[frozenset[int], frozenset[int]] = {}
    return tuple(pool.setdefault(a, a) if len(a) == 1 else a for a in adj)


class Graph:
    """Simple undirected graph with frozen adjacency sets.

    Build with ``Graph(n, edges)``; loops and duplicate edges are rejected.
    """

    __slots__ = ("_adj", "_m", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self._adj = _share_singletons([frozenset(a) for a in adj])
        self._m = m
        self._degrees = None

    @classmethod
    def _from_adjacency(cls, adj: Sequence[frozenset[int]], m: int | None = None) -> "Graph":
        # Trusted constructor: caller guarantees a symmetric, loop-free adjacency.
        g = cls.__new__(cls)
        g._adj = _share_singletons(adj)
        g._m = sum(len(a) for a in g._adj) // 2 if m is None else m
        g._degrees = None
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(len(a) for a in self._adj)
        return self._degrees

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(w for w in nbrs if w > u):
                yield (u, v)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < len(self._adj)):
            raise GraphError(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v) | {v}


def closed_union(g: Graph, u: int, v: int) -> frozenset[int]:
    """``N[u] | N[v]`` for the edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = g.adjacency
    return adj[u] | adj[v]


def isolated_after_removal(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``s`` that have no neighbour outside ``s``.

    Degree-0 vertices of ``g`` itself are included, as they are isolated in
    ``g - s`` as well.
    """
    s = s if isinstance(s, (set, frozenset)) else frozenset(s)
    adj = g.adjacency
    if not s:
        return frozenset(v for v, a in enumerate(adj) if not a)
    cand: set[int] = set()
    for x in s:
        cand.update(adj[x])
    cand.difference_update(s)
    return frozenset(w for w in cand if adj[w] <= s)


def remove_vertices_mapped(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``V(g) - s`` and its ``new -> old`` id table."""
    s = s if isinstance(s, (set, frozenset)) else frozenset(s)
    adj = g.adjacency
    if not s:
        return g, tuple(range(g.n))
    kept = tuple(v for v in range(len(adj)) if v not in s)
    old_to_new = [-1] * len(adj)
    for new, old in enumerate(kept):
        old_to_new[old] = new
    new_adj = []
    singles: dict[frozenset[int], frozenset[int]] = {}
    for old in kept:
        nb = adj[old]
        if len(nb) == 1:
            out = singles.get(nb)
            if out is None:
                (w,) = nb
                out = singles[nb] = frozenset() if w in s else frozenset((old_to_new[w],))
            new_adj.append(out)
        elif nb.isdisjoint(s):
            new_adj.append(frozenset([old_to_new[w] for w in nb]))
        else:
            new_adj.append(frozenset([old_to_new[w] for w in nb if w not in s]))
    return Graph._from_adjacency(new_adj), kept


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    return remove_vertices_mapped(g, s)[0]


def induced_subgraph_mapped(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    keep = frozenset(keep)
    return remove_vertices_mapped(g, frozenset(g.vertices()) - keep)


def strip_isolated_mapped(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    return remove_vertices_mapped(g, frozenset(v for v, d in enumerate(g.degrees) if d == 0))


def strip_isolated(g: Graph) -> Graph:
    return strip_isolated_mapped(g)[0]


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components in order of their smallest vertex."""
    adj = g.adjacency
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[frozenset[int]] = []
    m = 0
    for h in graphs:
        off = len(adj)
        adj.extend(frozenset(w + off for w in a) for a in h.adjacency)
        m += h.m
    return Graph._from_adjacency(adj, m)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex set")
    adj: list[frozenset[int]] = [frozenset()] * g.n
    for v, a in enumerate(g.adjacency):
        adj[perm[v]] = frozenset(perm[w] for w in a)
    return Graph._from_adjacency(adj, g.m)


def _vertex_invariants(g: Graph) -> list[tuple]:
    adj, deg = g.adjacency, g.degrees
    out = []
    for v, a in enumerate(adj):
        tri = sum(len(a & adj[w]) for w in a) // 2
        out.append((deg[v], tuple(sorted(deg[w] for w in a)), tri))
    return out


def invariant_key(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint (equal for isomorphic graphs)."""
    return (g.n, g.m, tuple(sorted(_vertex_invariants(g))))


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs with at most 12 vertices.

    Prunes on degree sequences and per-vertex invariants, then extends a
    partial bijection vertex by vertex, checking adjacency as it goes.
    """
    if g.n > ISOMORPHISM_CAP or h.n > ISOMORPHISM_CAP:
        raise GraphError(f"isomorphism test limited to n <= {ISOMORPHISM_CAP}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    inv_g, inv_h = _vertex_invariants(g), _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False
    n = g.n
    ga, ha = g.adjacency, h.adjacency

    # Place constrained vertices first: rare invariant classes, then BFS order.
    freq: dict[tuple, int] = {}
    for x in inv_g:
        freq[x] = freq.get(x, 0) + 1
    order: list[int] = []
    placed = [False] * n
    while len(order) < n:
        frontier = [v for v in range(n) if not placed[v] and any(placed[w] for w in ga[v])]
        pool = frontier or [v for v in range(n) if not placed[v]]
        v = min(pool, key=lambda x: (freq[inv_g[x]], -g.degrees[x], x))
        placed[v] = True
        order.append(v)

    candidates = [[y for y in range(n) if inv_h[y] == inv_g[x]] for x in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        for y in candidates[x]:
            if used[y]:
                continue
            if any((mapping[w] in ha[y]) != (w in ga[x]) for w in order[:i]):
                continue
            mapping[x] = y
            used[y] = True
            if extend(i + 1):
                return True
            used[y] = False
        mapping[x] = -1
        return False

    return extend(0)
