"""Edge-list files and JSON run reports.

Edge-list format::

    # comment lines start with '#'
    n m
    u v        (m lines, 0-based ids)

Report schema version 1 is a JSON object with keys ``schema_version``,
``toolkit_version``, ``graph`` (n, m, edges), ``algorithm``, ``seed``,
``timing_s``, ``bounds`` (a BoundReport), ``matchings`` (name -> edge list),
``exact`` (optional), ``trace`` (optional step summaries).
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .bounds import BoundReport
from .constructive import RunTrace
from .exact import ExactResult
from .graph import Graph
from .matching import InducedMatching, check_induced_matching

REPORT_SCHEMA_VERSION = 1


class EdgeListError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_ints(line: str, lineno: int, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise EdgeListError(lineno, f"expected two integers for {what}, got {line.strip()!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListError(lineno, f"non-integer {what}: {line.strip()!r}") from None
    return a, b


def parse_edge_list(text: str) -> Graph:
    """Parse an edge list; any malformed input raises :class:`EdgeListError`."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            n, m = _parse_ints(line, lineno, "header 'n m'")
            if n < 0 or m < 0:
                raise EdgeListError(lineno, "negative n or m in header")
            header = (n, m)
            continue
        u, v = _parse_ints(line, lineno, "edge")
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"vertex id out of range [0, {n}) in edge ({u}, {v})")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise EdgeListError(lineno, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise EdgeListError(0, "missing header 'n m'")
    if len(edges) != header[1]:
        raise EdgeListError(0, f"header announces {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def write_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(write_edge_list(g, comment))


# ---------------------------------------------------------------- reports


def trace_summary(trace: RunTrace) -> dict:
    return {
        "n_original": trace.n_original,
        "n_working": trace.n_working,
        "delta": trace.delta,
        "B": trace.B,
        "delta0": trace.delta0,
        "padding_added": trace.padding_added,
        "all_certified": trace.all_certified,
        "certificate_ok": trace.certificate_ok,
        "max_footprint": trace.max_footprint,
        "max_f_ratio": trace.max_f_ratio,
        "steps": [
            {
                "edge": list(st.edge),
                "matched_edge": list(st.matched_edge),
                "case": st.case,
                "footprint": st.footprint,
                "S_size": len(st.S),
                "I_size": len(st.I),
                "certified": st.certified,
                "f_v": None if st.f_v is None else str(st.f_v),
            }
            for st in trace.steps
        ],
    }


def build_report(
    g: Graph,
    algorithm: str,
    matchings: dict[str, InducedMatching],
    bounds: BoundReport,
    *,
    timing_s: float,
    seed: int | None = None,
    trace: RunTrace | None = None,
    exact: ExactResult | None = None,
) -> dict:
    report = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "toolkit_version": __version__,
        "algorithm": algorithm,
        "seed": seed,
        "timing_s": round(timing_s, 6),
        "graph": {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]},
        "bounds": asdict(bounds),
        "matchings": {name: [list(e) for e in m.sorted_edges()] for name, m in matchings.items()},
    }
    if exact is not None:
        report["exact"] = {"value": exact.value, "status": exact.status, "nodes_explored": exact.nodes_explored}
    if trace is not None:
        report["trace"] = trace_summary(trace)
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def load_report(text: str) -> dict:
    report = json.loads(text)
    if report.get("schema_version") != REPORT_SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {report.get('schema_version')!r}")
    return report


def report_graph(report: dict) -> Graph:
    gr = report["graph"]
    return Graph(gr["n"], (tuple(e) for e in gr["edges"]))


def verify_report(report: dict, g: Graph | None = None) -> list[str]:
    """Re-check every embedded matching; returns a list of problems (empty if fine)."""
    g = report_graph(report) if g is None else g
    problems = []
    for name, edges in report["matchings"].items():
        ok, why = check_induced_matching(g, [tuple(e) for e in edges])
        if not ok:
            problems.append(f"{name}: {why}")
        if report["bounds"]["achieved"].get(name) != len(edges):
            problems.append(f"{name}: achieved size disagrees with matching")
    return problems
