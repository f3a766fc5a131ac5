"""Small-graph scanner for the small-degree conjecture.

Exhaustive mode lists every connected graph on at most 7 vertices with
maximum degree at least 3, one per isomorphism class, and checks each.
Graphs on ``k`` vertices are produced from those on ``k - 1`` by adding a
vertex with every possible neighbourhood (every graph arises this way, as
deleting its last vertex gives a smaller one); duplicates are removed with
an invariant bucket followed by :func:`is_isomorphic_small`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bounds import (
    EXCEPTION_C5SQ,
    EXCEPTION_K33P,
    HOLDS,
    INCONCLUSIVE,
    VIOLATED,
    ComponentStatus,
    bound_B,
    conjecture_check,
)
from .generators import random_graph
from .graph import Graph, invariant_key, is_connected, is_isomorphic_small, max_degree

EXHAUSTIVE_MAX_N = 7


def nonisomorphic_graphs(max_n: int) -> list[list[Graph]]:
    """``out[k]`` holds one graph per isomorphism class on ``k`` vertices."""
    if max_n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration is capped at n = {EXHAUSTIVE_MAX_N}")
    out: list[list[Graph]] = [[Graph(0)]]
    for k in range(1, max_n + 1):
        reps: list[Graph] = []
        buckets: dict[tuple, list[Graph]] = {}
        for base in out[k - 1]:
            base_edges = list(base.edges())
            for mask in range(1 << (k - 1)):
                edges = base_edges + [(i, k - 1) for i in range(k - 1) if mask >> i & 1]
                g = Graph(k, edges)
                bucket = buckets.setdefault(invariant_key(g), [])
                if any(is_isomorphic_small(g, h) for h in bucket):
                    continue
                bucket.append(g)
                reps.append(g)
        out.append(reps)
    return out


def scan_candidates(max_n: int) -> list[Graph]:
    """Connected graphs with ``n <= max_n`` and maximum degree at least 3."""
    return [
        g
        for graphs in nonisomorphic_graphs(max_n)
        for g in graphs
        if max_degree(g) >= 3 and is_connected(g)
    ]


@dataclass
class ScanResult:
    mode: str
    params: dict
    checked: int = 0
    holds: int = 0
    tight: list[dict] = field(default_factory=list)
    exceptions: list[dict] = field(default_factory=list)
    violators: list[dict] = field(default_factory=list)
    inconclusive: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "params": self.params,
            "checked": self.checked,
            "holds": self.holds,
            "tight": self.tight,
            "exceptions": self.exceptions,
            "violators": self.violators,
            "inconclusive": self.inconclusive,
        }


def certificate(g: Graph, st: ComponentStatus) -> dict:
    """Everything needed to re-verify a verdict independently."""
    return {
        "n": g.n,
        "m": g.m,
        "delta": st.delta,
        "edges": [list(e) for e in g.edges()],
        "nu_s": st.nu_s,
        "exact": st.exact,
        "witness": [list(e) for e in st.witness] if st.witness is not None else None,
        "B": bound_B(st.delta),
        "guarantee": st.guarantee,
        "status": st.status,
    }


def _record(result: ScanResult, g: Graph, budget: int | None) -> None:
    (st,) = conjecture_check(g, budget)
    result.checked += 1
    if st.status == HOLDS:
        result.holds += 1
        if st.nu_s == st.guarantee:
            result.tight.append(certificate(g, st))
    elif st.status in (EXCEPTION_C5SQ, EXCEPTION_K33P):
        result.exceptions.append(certificate(g, st))
    elif st.status == VIOLATED:
        result.violators.append(certificate(g, st))
    elif st.status == INCONCLUSIVE:
        result.inconclusive.append(certificate(g, st))


def scan_exhaustive(max_n: int, budget: int | None = None) -> ScanResult:
    if max_n > EXHAUSTIVE_MAX_N:
        raise ValueError(
            f"exhaustive scan refuses n > {EXHAUSTIVE_MAX_N}; use random trials instead"
        )
    result = ScanResult("exhaustive", {"max_n": max_n})
    for g in scan_candidates(max_n):
        _record(result, g, budget)
    return result


def scan_random(trials: int, min_n: int = 8, max_n: int = 10, seed: int = 0,
                budget: int | None = None) -> ScanResult:
    """Check ``trials`` seeded random connected graphs with ``min_n <= n <= max_n``.

    Draws that are disconnected or have maximum degree below 3 are skipped
    and do not count as trials.
    """
    rng = random.Random(seed)
    result = ScanResult("random", {"trials": trials, "min_n": min_n, "max_n": max_n, "seed": seed})
    attempts = 0
    while result.checked < trials:
        attempts += 1
        if attempts > 1000 * max(trials, 1):
            raise RuntimeError("could not draw enough connected graphs with max degree >= 3")
        n = rng.randint(min_n, max_n)
        g = random_graph(n, rng.uniform(0.15, 0.6), rng.getrandbits(32))
        if max_degree(g) < 3 or not is_connected(g):
            continue
        _record(result, g, budget)
    return result
