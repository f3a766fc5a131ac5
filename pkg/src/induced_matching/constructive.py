"""Bound-achieving induced matching by repeated certified deletion.

Each round picks an edge ``uv``, deletes ``S = N[u] | N[v]`` together with
the vertices ``I`` left isolated by that, and recurses on what remains.
The chosen edges form an induced matching, and the size of ``S | I`` (the
footprint) charges every vertex to exactly one matching edge. A step is
certified when its footprint is at most ``bound_B(D)``; if all steps are
certified the matching has at least ``ceil(n / bound_B(D))`` edges.

Edge choice follows a fixed cascade:

1. ``claim1``: an edge with degree sum at most ``D/4``.
2. ``claim2``: a vertex with more than ``3D/4`` neighbours of degree at
   most 9, matched to its lowest such neighbour.
3. ``case1`` / ``case2``: the vertex ``v`` of largest potential, matched to
   a degree-1 neighbour if it has one, else to a minimum-degree neighbour.
4. ``fallback-scan``: an edge of minimum footprint.

Stages 1-3 only return certified edges; stage 4 always returns something,
so the loop makes progress on every graph.

Before every round, vertices holding a degree-1 neighbour are padded with
synthetic pendants up to degree ``D``. Chosen edges that end on a synthetic
pendant are exchanged for the anchor's real pendant before being reported.
``D`` is the maximum degree of the input and stays fixed for the run.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .bounds import bound_B
from .graph import Graph, max_degree, remove_vertices_mapped, strip_isolated_mapped
from .matching import Edge, InducedMatching, norm_edge

CLAIM1 = "claim1"
CLAIM2 = "claim2"
CASE1 = "case1-deg1-neighbor"
CASE2 = "case2-min-degree"
FALLBACK = "fallback-scan"
CASE_LABELS = (CLAIM1, CLAIM2, CASE1, CASE2, FALLBACK)

PROVEN_DELTA0 = 1000
MIN_DELTA0 = 200
LOW_DEGREE = 9

# Float potentials within this relative distance of the maximum are
# re-evaluated exactly before the argmax is taken.
_FLOAT_SLACK = 1e-9


class SelectionError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    delta0: int = PROVEN_DELTA0

    def __post_init__(self):
        if self.delta0 < MIN_DELTA0:
            raise ValueError(f"delta0 must be at least {MIN_DELTA0}, got {self.delta0}")
        if self.delta0 < PROVEN_DELTA0:
            warnings.warn(
                f"delta0={self.delta0} < {PROVEN_DELTA0}: certificates are empirical, not proven",
                stacklevel=3,
            )


# ---------------------------------------------------------------- padding


def pad_pendant_holders(g: Graph, delta: int) -> tuple[Graph, dict[int, int]]:
    """Top up every vertex that has a degree-1 neighbour to degree ``delta``.

    New vertices are appended after the existing ones, grouped by anchor in
    anchor order. Returns the padded graph and ``{synthetic: anchor}``.
    """
    adj, deg = g.adjacency, g.degrees
    holders = sorted({
        w for v, a in enumerate(adj) if deg[v] == 1 for w in a if deg[w] < delta
    })
    if not holders:
        return g, {}
    new_adj = list(adj)
    padding: dict[int, int] = {}
    for v in holders:
        extra = range(len(new_adj), len(new_adj) + delta - deg[v])
        new_adj[v] = new_adj[v] | frozenset(extra)
        for p in extra:
            new_adj.append(frozenset((v,)))
            padding[p] = v
    return Graph._from_adjacency(new_adj, g.m + len(padding)), padding


# -------------------------------------------------------------- potential


@dataclass(frozen=True)
class PotentialTable:
    """Potentials ``f(v) = sum of 1/d(w)`` over neighbours with ``d(w) != delta``.

    ``approx`` holds float values for screening; indexing returns the exact
    rational, computed from the graph on demand.
    """

    graph: Graph
    delta: int
    approx: tuple[float, ...]

    def __getitem__(self, v: int) -> Fraction:
        return exact_potential(self.graph, v, self.delta)

    def __len__(self) -> int:
        return len(self.approx)

    def exact_values(self) -> list[Fraction]:
        return [self[v] for v in range(len(self.approx))]

    def argmax(self) -> int:
        """Vertex of largest exact potential, lowest id on ties."""
        if not self.approx:
            raise SelectionError("empty graph has no potentials")
        top = max(self.approx)
        cut = top - _FLOAT_SLACK * max(1.0, top)
        cands = [v for v, x in enumerate(self.approx) if x >= cut]
        if len(cands) == 1:
            return cands[0]
        exact = [(self[v], -v) for v in cands]
        return -max(exact)[1]


def exact_potential(g: Graph, v: int, delta: int) -> Fraction:
    deg = g.degrees
    counts = Counter(deg[w] for w in g.adjacency[v] if deg[w] != delta)
    return sum((Fraction(c, d) for d, c in counts.items()), Fraction(0))


def potential(g: Graph, delta: int) -> PotentialTable:
    deg = g.degrees
    inv = [0.0 if d == delta or d == 0 else 1.0 / d for d in deg]
    singles: dict[frozenset[int], float] = {}
    approx = []
    for a in g.adjacency:
        if len(a) == 1:
            x = singles.get(a)
            if x is None:
                x = singles[a] = inv[next(iter(a))]
            approx.append(x)
        else:
            approx.append(sum([inv[w] for w in a]))
    return PotentialTable(g, delta, tuple(approx))


# ---------------------------------------------------------- neighbourhood


@dataclass(frozen=True)
class NeighborhoodProfile:
    n1: int
    ns: int
    nl: int
    nd: int

    @property
    def total(self) -> int:
        return self.n1 + self.ns + self.nl + self.nd


def neighborhood_profile(g: Graph, v: int, delta: int) -> NeighborhoodProfile:
    """Count neighbours of degree 1, ``2..floor(D/8)``, ``(floor(D/8), D)`` and ``D``.

    Neighbours above ``D`` cannot occur when ``delta`` is the true maximum
    degree; they are counted with the ``D`` class.
    """
    small = delta // 8
    n1 = ns = nl = nd = 0
    deg = g.degrees
    for w in g.neighbors(v):
        d = deg[w]
        if d == 1:
            n1 += 1
        elif d >= delta:
            nd += 1
        elif d <= small:
            ns += 1
        else:
            nl += 1
    return NeighborhoodProfile(n1, ns, nl, nd)


# -------------------------------------------------------------- footprint


def footprint_sets(g: Graph, u: int, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """``S = N[u] | N[v]`` and the vertices isolated by deleting ``S``."""
    adj = g.adjacency
    if v not in adj[u]:
        raise SelectionError(f"({u}, {v}) is not an edge")
    s = adj[u] | adj[v]
    cand: set[int] = set()
    for x in s:
        cand.update(adj[x])
    cand.difference_update(s)
    return s, frozenset(w for w in cand if adj[w] <= s)


def footprint(g: Graph, u: int, v: int) -> int:
    s, i = footprint_sets(g, u, v)
    return len(s) + len(i)


def _footprint_capped(g: Graph, u: int, v: int, cap: int) -> int:
    # Exact footprint when it is <= cap, otherwise some value > cap.
    adj = g.adjacency
    s = adj[u] | adj[v]
    size = len(s)
    if size > cap:
        return size
    seen: set[int] = set()
    for x in s:
        for w in adj[x]:
            if w in s or w in seen:
                continue
            seen.add(w)
            if adj[w] <= s:
                size += 1
                if size > cap:
                    return size
    return size


# -------------------------------------------------------------- selection


def select_edge(g: Graph, delta: int, pt: PotentialTable | None = None) -> tuple[Edge, str]:
    """Run the selection cascade; returns the chosen ``(u, v)`` and its label.

    For ``case1``/``case2`` the edge is ``(u, v)`` with ``v`` the argmax of
    the potential; for ``claim2`` ``v`` is the vertex with many low-degree
    neighbours. Other labels return the edge in sorted order.
    """
    if g.m == 0:
        raise SelectionError("cannot select an edge in an edgeless graph")
    cap = bound_B(max(delta, 1))
    adj, deg = g.adjacency, g.degrees

    # claim1: 4 * (d(u) + d(v)) <= delta, lexicographic edge order.
    low = [u for u in range(g.n) if 0 < deg[u] and 4 * (deg[u] + 1) <= delta]
    cands = sorted((u, w) for u in low for w in adj[u] if w > u and 4 * (deg[u] + deg[w]) <= delta)
    for u, w in cands:
        if _footprint_capped(g, u, w, cap) <= cap:
            return (u, w), CLAIM1

    # claim2: > 3*delta/4 neighbours of degree <= 9, best count first.
    heavy = []
    for v in range(g.n):
        if 4 * deg[v] <= 3 * delta:
            continue
        c = sum(1 for w in adj[v] if deg[w] <= LOW_DEGREE)
        if 4 * c > 3 * delta:
            heavy.append((-c, v))
    for _, v in sorted(heavy):
        u = min(w for w in adj[v] if deg[w] <= LOW_DEGREE)
        if _footprint_capped(g, u, v, cap) <= cap:
            return (u, v), CLAIM2

    # case1 / case2 on the argmax of the potential.
    if pt is None:
        pt = potential(g, delta)
    v = pt.argmax()
    if deg[v] > 0:
        ones = [w for w in adj[v] if deg[w] == 1]
        if ones:
            u, label = min(ones), CASE1
        else:
            dmin = min(deg[w] for w in adj[v])
            u, label = min(w for w in adj[v] if deg[w] == dmin), CASE2
        if _footprint_capped(g, u, v, cap) <= cap:
            return (u, v), label

    return _fallback_scan(g), FALLBACK


def _fallback_scan(g: Graph) -> Edge:
    # |S| is a lower bound on the footprint: visit edges by |S| and stop
    # once it exceeds the best footprint found.
    adj = g.adjacency
    order = sorted((len(adj[u] | adj[v]), u, v) for u, v in g.edges())
    best = None
    best_fp = None
    for s_size, u, v in order:
        if best_fp is not None and s_size > best_fp:
            break
        fp = _footprint_capped(g, u, v, best_fp if best_fp is not None else g.n)
        if best_fp is None or fp < best_fp or (fp == best_fp and (u, v) < best):
            best, best_fp = (u, v), fp
    return best


# ---------------------------------------------------------------- tracing


@dataclass(frozen=True)
class StepRecord:
    """One round of the main loop, in run-global vertex ids.

    Run-global ids: ``0..n-1`` are the input vertices, larger ids are
    synthetic pendants created by padding.
    """

    edge: Edge
    matched_edge: Edge
    case: str
    S: frozenset[int]
    I: frozenset[int]
    footprint: int
    certified: bool
    f_v: Fraction | None
    padding_added: int

    @property
    def removed(self) -> frozenset[int]:
        return self.S | self.I


@dataclass
class RunTrace:
    """Certificate for a whole run.

    ``base_vertices`` are the non-isolated input vertices and ``anchors``
    maps each synthetic pendant to the vertex it was attached to; together
    they make up the working vertex set that the steps partition.
    """

    n_original: int
    n_working: int
    delta: int
    B: int | None
    delta0: int
    base_vertices: frozenset[int] = frozenset()
    steps: list[StepRecord] = field(default_factory=list)
    anchors: dict[int, int] = field(default_factory=dict)
    matching: InducedMatching = field(default_factory=lambda: InducedMatching(frozenset()))
    # Largest f(v)/D seen over vertices without a degree-1 neighbour (float screen).
    max_f_ratio: float = 0.0

    @property
    def padding_added(self) -> int:
        return len(self.anchors)

    @property
    def all_certified(self) -> bool:
        return all(s.certified for s in self.steps)

    @property
    def max_footprint(self) -> int:
        return max((s.footprint for s in self.steps), default=0)

    @property
    def theorem_applies(self) -> bool:
        return self.delta >= self.delta0

    @property
    def guarantee(self) -> int:
        return -(-self.n_working // self.B) if self.B and self.n_working else 0

    @property
    def certificate_ok(self) -> bool:
        """False only when the theorem applies and the certificate broke."""
        return not self.theorem_applies or (self.all_certified and len(self.matching) >= self.guarantee)

    def working_vertices(self) -> set[int]:
        return set(self.base_vertices) | set(self.anchors)


def check_partition(trace: RunTrace) -> bool:
    """Footprints of all steps partition the working vertex set."""
    seen: set[int] = set()
    total = 0
    for st in trace.steps:
        rem = st.removed
        if len(rem) != st.footprint or not seen.isdisjoint(rem):
            return False
        seen |= rem
        total += st.footprint
    return seen == trace.working_vertices() and total == trace.n_working


# ------------------------------------------------------------------- main


def run(g: Graph, config: RunConfig | None = None) -> tuple[InducedMatching, RunTrace]:
    """Compute an induced matching of ``g`` and its step-by-step certificate.

    The matching is reported in the vertex ids of ``g``. When the maximum
    degree reaches ``config.delta0`` the trace's ``certificate_ok`` says
    whether every step stayed within ``bound_B``.
    """
    config = config or RunConfig()
    delta = max_degree(g)
    B = bound_B(delta) if delta >= 1 else None
    work, kept = strip_isolated_mapped(g)
    labels = list(kept)
    trace = RunTrace(g.n, work.n, delta, B, config.delta0, base_vertices=frozenset(labels))
    anchors = trace.anchors
    next_id = g.n
    chosen: list[Edge] = []

    # Deleting S | I never isolates a survivor, so stripping once suffices.
    while work.m > 0:
        work, padding = pad_pendant_holders(work, delta)
        for p in sorted(padding):
            anchors[next_id] = labels[padding[p]]
            labels.append(next_id)
            next_id += 1
        trace.n_working += len(padding)

        pt = potential(work, delta)
        if delta > 0:
            trace.max_f_ratio = max(trace.max_f_ratio, _max_f_without_pendant(work, pt) / delta)
        (a, b), case = select_edge(work, delta, pt)
        s, i = footprint_sets(work, a, b)
        removed = s | i
        fp = len(removed)
        matched = _lift(work, labels, anchors, a, b, removed)
        chosen.append(matched)
        trace.steps.append(StepRecord(
            edge=norm_edge((labels[a], labels[b])),
            matched_edge=matched,
            case=case,
            S=frozenset(labels[x] for x in s),
            I=frozenset(labels[x] for x in i),
            footprint=fp,
            certified=B is not None and fp <= B,
            f_v=pt[b] if case in (CLAIM2, CASE1, CASE2) else None,
            padding_added=len(padding),
        ))
        work, kept = remove_vertices_mapped(work, removed)
        labels = [labels[k] for k in kept]

    trace.matching = InducedMatching.of(chosen)
    return trace.matching, trace


def _max_f_without_pendant(g: Graph, pt: PotentialTable) -> float:
    adj, deg = g.adjacency, g.degrees
    return max(
        (x for v, x in enumerate(pt.approx) if x > 0 and all(deg[w] != 1 for w in adj[v])),
        default=0.0,
    )


def _lift(work: Graph, labels: list[int], anchors: dict[int, int], a: int, b: int,
          removed: frozenset[int]) -> Edge:
    """Replace a synthetic endpoint by a real pendant of its anchor.

    The replacement ``x`` must be a real neighbour of the anchor whose
    whole neighbourhood is deleted in this step, so later edges cannot see it.
    """
    la, lb = labels[a], labels[b]
    if la not in anchors and lb not in anchors:
        return norm_edge((la, lb))
    anchor = b if la in anchors else a
    adj = work.adjacency
    subs = [
        x for x in adj[anchor]
        if labels[x] not in anchors and adj[x] <= removed
    ]
    if not subs:
        raise AssertionError(f"no real pendant to exchange at anchor {labels[anchor]}")
    x = min(subs, key=lambda y: labels[y])
    return norm_edge((labels[anchor], labels[x]))


def matching_from_steps(steps: Iterable[StepRecord]) -> InducedMatching:
    return InducedMatching.of(st.matched_edge for st in steps)
