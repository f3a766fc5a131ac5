"""Closed-form guarantees and the small-degree conjecture check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import nu_s_exact
from .generators import c5_squared, k33_plus
from .graph import Graph, connected_components, induced_subgraph_mapped, is_isomorphic_small, max_degree
from .matching import InducedMatching, is_induced_matching, max_conflicts

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"
NOT_APPLICABLE = "not-applicable"
EXCEPTION_C5SQ = "exception-C5^2"
EXCEPTION_K33P = "exception-K33+"


def bound_B(delta: int) -> int:
    """``(ceil(delta/2) + 1) * (floor(delta/2) + 1)``."""
    if delta < 1:
        raise ValueError(f"bound_B needs delta >= 1, got {delta}")
    return ((delta + 1) // 2 + 1) * (delta // 2 + 1)


def theorem_guarantee_rational(n: int, delta: int) -> Fraction:
    return Fraction(n, bound_B(delta))


def theorem_guarantee(n: int, delta: int) -> int:
    if n < 1:
        raise ValueError("theorem_guarantee needs n >= 1")
    return -(-n // bound_B(delta))


def trivial_guarantee_rational(n: int, delta: int) -> Fraction:
    if delta < 1:
        raise ValueError("trivial_guarantee needs delta >= 1")
    return Fraction(n, 2 * max_conflicts(delta))


def trivial_guarantee(n: int, delta: int) -> int:
    if n < 1 or delta < 1:
        raise ValueError("trivial_guarantee needs n >= 1 and delta >= 1")
    return -(-n // (2 * max_conflicts(delta)))


def helper_inequality_check(delta: int) -> bool:
    """``delta^2/4 + delta + 3/4 <= bound_B(delta)``, compared exactly."""
    if delta < 1:
        raise ValueError("helper_inequality_check needs delta >= 1")
    # Multiply through by 4 to stay in integers.
    return delta * delta + 4 * delta + 3 <= 4 * bound_B(delta)


@dataclass(frozen=True)
class ComponentStatus:
    vertices: tuple[int, ...]
    n: int
    delta: int
    nu_s: int | None
    exact: bool
    guarantee: int | None
    status: str
    witness: InducedMatching | None = None


def _exception_label(h: Graph) -> str | None:
    for label, ref in ((EXCEPTION_C5SQ, c5_squared()), (EXCEPTION_K33P, k33_plus())):
        if h.n == ref.n and h.m == ref.m:
            if is_isomorphic_small(h, ref):
                return label
    return None


def conjecture_check(g: Graph, budget: int | None = None) -> list[ComponentStatus]:
    """Status of the small-degree conjecture on every component of ``g``.

    Components with maximum degree below 3 are ``not-applicable``. The two
    known exceptions are labelled before any comparison. If the exact search
    runs out of budget, the component is ``holds`` when the lower bound
    already meets the guarantee and ``inconclusive`` otherwise.
    """
    out = []
    for comp in connected_components(g):
        h, kept = induced_subgraph_mapped(g, comp)
        delta = max_degree(h)
        verts = tuple(sorted(kept))
        if delta < 3:
            out.append(ComponentStatus(verts, h.n, delta, None, False, None, NOT_APPLICABLE))
            continue
        res = nu_s_exact(h, budget)
        witness = InducedMatching.of((kept[u], kept[v]) for u, v in res.witness)
        guarantee = theorem_guarantee(h.n, delta)
        label = _exception_label(h)
        if label is not None:
            status = label
        elif res.value >= guarantee:
            status = HOLDS
        elif res.is_exact:
            status = VIOLATED
        else:
            status = INCONCLUSIVE
        out.append(ComponentStatus(verts, h.n, delta, res.value, res.is_exact, guarantee, status, witness))
    return out


@dataclass
class BoundReport:
    n: int
    delta: int
    B: int | None
    theorem_guarantee: int | None
    theorem_guarantee_rational: str | None
    trivial_guarantee: int | None
    trivial_guarantee_rational: str | None
    achieved: dict[str, int] = field(default_factory=dict)
    conjecture_status: list[str] = field(default_factory=list)


def bound_report(
    g: Graph,
    matchings: dict[str, InducedMatching] | None = None,
    conjecture: list[ComponentStatus] | None = None,
) -> BoundReport:
    """Collect the guarantees for ``g`` and the sizes reached by each algorithm.

    Every supplied matching is re-validated; an invalid one raises.
    Guarantees are computed on the number of non-isolated vertices.
    """
    n = sum(1 for d in g.degrees if d > 0)
    delta = max_degree(g)
    achieved = {}
    for name, m in (matchings or {}).items():
        if not is_induced_matching(g, m):
            raise ValueError(f"{name} returned an invalid induced matching")
        achieved[name] = len(m)
    if delta >= 1 and n >= 1:
        report = BoundReport(
            n, delta, bound_B(delta),
            theorem_guarantee(n, delta), str(theorem_guarantee_rational(n, delta)),
            trivial_guarantee(n, delta), str(trivial_guarantee_rational(n, delta)),
            achieved,
        )
    else:
        report = BoundReport(n, delta, None, None, None, None, None, achieved)
    if conjecture is not None:
        report.conjecture_status = [c.status for c in conjecture]
    return report
