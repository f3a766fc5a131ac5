"""Benchmark harness: constructive vs greedy vs budgeted exact on a corpus.

A corpus spec is a ``;``-separated list of items ``family:key=val,...@count``.
``count`` (default 1) instances are generated with seeds ``seed, seed+1, ...``;
a ``copies=k`` parameter replaces each instance by ``k`` disjoint copies and
``n=a..b`` expands into one item per value. Example::

    h1:delta=1000,copies=10;regular:n=2000,d=50@3;path:n=5..12
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .baseline import FIRST_EDGE, MIN_CONFLICT, greedy_induced_matching
from .bounds import bound_B, theorem_guarantee, trivial_guarantee
from .constructive import RunConfig, run
from .exact import nu_s_exact
from .generators import copies, make_family
from .graph import Graph, max_degree
from .matching import is_induced_matching, max_conflicts

ALGORITHMS = ("constructive", "greedy-first", "greedy-minconf", "exact")

# Skip the materialised-conflict-graph policy above this many conflict pairs.
MINCONF_MAX_CONFLICTS = 5_000_000
EXACT_MAX_EDGES = 300

CSV_COLUMNS = [
    "instance", "family", "params", "seed", "n", "m", "delta", "B",
    "theorem_guarantee", "trivial_guarantee",
    "constructive", "constructive_steps", "constructive_certified", "max_footprint",
    "constructive_ge_guarantee",
    "greedy_first", "greedy_minconf", "exact", "exact_status",
    "t_constructive", "t_greedy_first", "t_greedy_minconf", "t_exact",
]


@dataclass(frozen=True)
class CorpusItem:
    family: str
    params: dict
    seed: int

    def label(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params.items())

    def build(self) -> Graph:
        params = dict(self.params)
        k = int(params.pop("copies", 1))
        g = make_family(self.family, params, self.seed)
        return copies(g, k) if k > 1 else g


def parse_corpus(spec: str, seed: int = 0) -> list[CorpusItem]:
    items = []
    next_seed = seed
    for chunk in filter(None, (c.strip() for c in spec.split(";"))):
        body, _, count = chunk.partition("@")
        family, _, rest = body.partition(":")
        params: dict[str, str] = {}
        for kv in filter(None, rest.split(",")):
            if "=" not in kv:
                # Bare values continue the previous key (orders=1,1,1,2,2).
                if not params:
                    raise ValueError(f"malformed corpus parameter {kv!r}")
                last = list(params)[-1]
                params[last] += "," + kv
                continue
            key, val = kv.split("=", 1)
            params[key.strip()] = val.strip()
        expanded = [params]
        for key, val in params.items():
            if ".." in val:
                lo, hi = (int(x) for x in val.split(".."))
                expanded = [{**p, key: str(x)} for p in expanded for x in range(lo, hi + 1)]
        for p in expanded:
            for _ in range(int(count) if count else 1):
                items.append(CorpusItem(family.strip(), p, next_seed))
                next_seed += 1
    return items


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_instance(index: int, item: CorpusItem, algorithms=ALGORITHMS, budget: int | None = None,
                   delta0: int = 1000) -> dict:
    g = item.build()
    n = sum(1 for d in g.degrees if d > 0)
    delta = max_degree(g)
    row: dict = {c: "" for c in CSV_COLUMNS}
    row.update(instance=index, family=item.family, params=item.label(), seed=item.seed,
               n=n, m=g.m, delta=delta)
    if delta >= 1:
        row.update(B=bound_B(delta), theorem_guarantee=theorem_guarantee(n, delta),
                   trivial_guarantee=trivial_guarantee(n, delta))
    if "constructive" in algorithms:
        (m, trace), t = _timed(run, g, RunConfig(delta0))
        assert is_induced_matching(g, m)
        row.update(constructive=len(m), constructive_steps=len(trace.steps),
                   constructive_certified=trace.all_certified, max_footprint=trace.max_footprint,
                   constructive_ge_guarantee=(len(m) >= row["theorem_guarantee"]) if delta >= 1 else "",
                   t_constructive=f"{t:.4f}")
    if "greedy-first" in algorithms:
        m, t = _timed(greedy_induced_matching, g, FIRST_EDGE)
        row.update(greedy_first=len(m), t_greedy_first=f"{t:.4f}")
    if "greedy-minconf" in algorithms and g.m * max_conflicts(delta) <= MINCONF_MAX_CONFLICTS:
        m, t = _timed(greedy_induced_matching, g, MIN_CONFLICT)
        row.update(greedy_minconf=len(m), t_greedy_minconf=f"{t:.4f}")
    if "exact" in algorithms and g.m <= EXACT_MAX_EDGES:
        res, t = _timed(nu_s_exact, g, budget)
        row.update(exact=res.value, exact_status=res.status, t_exact=f"{t:.4f}")
    return row


def bench(spec: str, seed: int = 0, algorithms=ALGORITHMS, budget: int | None = None,
          delta0: int = 1000) -> list[dict]:
    return [bench_instance(i, item, algorithms, budget, delta0)
            for i, item in enumerate(parse_corpus(spec, seed))]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
