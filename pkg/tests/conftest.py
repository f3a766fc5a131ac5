import random

import pytest
from hypothesis import strategies as st

from induced_matching.generators import (
    c5_squared,
    complete,
    cycle,
    k33_plus,
    path,
    random_graph,
    sharpness_h1,
    sharpness_h2,
    star,
)
from induced_matching.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, max_n=9, max_m=None):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, edges)


def named_small_graphs() -> dict[str, Graph]:
    return {
        "K2": path(2),
        "P4": path(4),
        "P5": path(5),
        "C5": cycle(5),
        "C6": cycle(6),
        "K4": complete(4),
        "star4": star(4),
        "3K2": Graph(6, [(0, 1), (2, 3), (4, 5)]),
        "C5sq": c5_squared(),
        "K33+": k33_plus(),
        "H1(3)": sharpness_h1(3),
        "H2(3)": sharpness_h2(3),
        "H1(4)": sharpness_h1(4),
    }


def small_corpus(count: int, seed: int = 0, max_m: int = 20) -> list[Graph]:
    """Seeded G(n, p) graphs with at most ``max_m`` edges."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 12)
        g = random_graph(n, rng.uniform(0.1, 0.7), rng.getrandbits(32))
        if g.m <= max_m:
            out.append(g)
    return out


@pytest.fixture
def p5():
    return path(5)
