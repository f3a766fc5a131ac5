"""Named graphs and seeded random corpora.

Numbering conventions are fixed so traces are reproducible: in pendant
constructions the base (clique) vertices come first, followed by the
pendants grouped by anchor in anchor order.
"""

from __future__ import annotations

import random
from collections import defaultdict
from typing import Sequence

from .graph import Graph, GraphError, disjoint_union

REGULAR_RETRY_CAP = 1000


def path(n: int) -> Graph:
    if n < 0:
        raise GraphError("path needs n >= 0")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    if k < 0:
        raise GraphError("star needs k >= 0")
    return Graph(k + 1, ((0, i) for i in range(1, k + 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("complete graph needs n >= 0")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def attach_pendants(base: Graph, k: int) -> Graph:
    """Give every base vertex ``k`` new degree-1 neighbours."""
    if k < 1:
        raise GraphError("attach_pendants needs k >= 1")
    n = base.n
    edges = list(base.edges())
    edges.extend((v, n + v * k + i) for v in range(n) for i in range(k))
    return Graph(n * (k + 1), edges)


def sharpness_h1(delta: int) -> Graph:
    """``K_{ceil(delta/2)+1}`` with ``floor(delta/2)`` pendants per vertex."""
    if delta < 3:
        raise GraphError("sharpness graphs need delta >= 3")
    return attach_pendants(complete((delta + 1) // 2 + 1), delta // 2)


def sharpness_h2(delta: int) -> Graph:
    """``K_{floor(delta/2)+1}`` with ``ceil(delta/2)`` pendants per vertex."""
    if delta < 3:
        raise GraphError("sharpness graphs need delta >= 3")
    return attach_pendants(complete(delta // 2 + 1), (delta + 1) // 2)


def c5_blowup(orders: Sequence[int]) -> Graph:
    """Replace the i-th vertex of ``C_5`` by an independent set of size ``orders[i]``.

    Consecutive classes (cyclically) are completely joined.
    """
    if len(orders) != 5 or any(o < 1 for o in orders):
        raise GraphError("c5_blowup needs five positive class sizes")
    starts = [sum(orders[:i]) for i in range(5)]
    classes = [range(starts[i], starts[i] + orders[i]) for i in range(5)]
    edges = [(x, y) for i in range(5) for x in classes[i] for y in classes[(i + 1) % 5]]
    return Graph(sum(orders), edges)


def c5_squared() -> Graph:
    return c5_blowup((2, 2, 2, 2, 2))


def k33_plus() -> Graph:
    return c5_blowup((1, 1, 1, 2, 2))


def k33_subdivided() -> Graph:
    """``K_{3,3}`` with edge (0, 3) replaced by the path 0-6-3."""
    edges = [e for e in complete_bipartite(3, 3).edges() if e != (0, 3)]
    return Graph(7, edges + [(0, 6), (6, 3)])


def copies(g: Graph, k: int) -> Graph:
    return disjoint_union(*([g] * k))


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi ``G(n, p)``, deterministic under ``seed``."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"infeasible G(n, p) parameters n={n}, p={p}")
    rng = random.Random(seed)
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def random_regular(n: int, d: int, seed: int | None = None) -> Graph:
    """Uniform-ish random ``d``-regular graph via the pairing model.

    Stubs are paired at random; pairs forming loops or repeated edges are
    rejected and their stubs re-paired. A dead end restarts the attempt;
    after ``REGULAR_RETRY_CAP`` failed attempts a ``GraphError`` is raised.
    """
    if (n * d) % 2 or not 0 <= d < n:
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(REGULAR_RETRY_CAP):
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            return Graph(n, sorted(edges))
    raise GraphError(f"pairing model failed {REGULAR_RETRY_CAP} times for n={n}, d={d}")


def _pairing_attempt(n: int, d: int, rng: random.Random) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover: dict[int, int] = defaultdict(int)
        it = iter(stubs)
        for a, b in zip(it, it):
            e = (a, b) if a < b else (b, a)
            if a != b and e not in edges:
                edges.add(e)
            else:
                leftover[a] += 1
                leftover[b] += 1
        if leftover and not _can_progress(edges, leftover):
            return None
        stubs = [v for v in sorted(leftover) for _ in range(leftover[v])]
    return edges


def _can_progress(edges: set[tuple[int, int]], leftover: dict[int, int]) -> bool:
    verts = sorted(leftover)
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if (a, b) not in edges:
                return True
    return False


FAMILIES = ("h1", "h2", "c5blowup", "pendants", "random", "regular", "path", "cycle", "star", "complete")


def make_family(family: str, params: dict, seed: int | None = None, base: Graph | None = None) -> Graph:
    """Build a named family from string-or-int parameters (CLI and bench entry point)."""
    def need(key):
        if key not in params:
            raise GraphError(f"family {family!r} needs parameter {key!r}")
        return params[key]

    if family == "h1":
        return sharpness_h1(int(need("delta")))
    if family == "h2":
        return sharpness_h2(int(need("delta")))
    if family == "c5blowup":
        orders = need("orders")
        if isinstance(orders, str):
            orders = [int(x) for x in orders.replace("/", ",").split(",")]
        return c5_blowup(orders)
    if family == "pendants":
        if base is None:
            raise GraphError("family 'pendants' needs a base graph")
        return attach_pendants(base, int(need("k")))
    if family == "random":
        return random_graph(int(need("n")), float(need("p")), seed)
    if family == "regular":
        return random_regular(int(need("n")), int(need("d")), seed)
    if family == "path":
        return path(int(need("n")))
    if family == "cycle":
        return cycle(int(need("n")))
    if family == "star":
        return star(int(need("k")))
    if family == "complete":
        return complete(int(need("n")))
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
