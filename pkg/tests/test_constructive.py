import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from induced_matching.bounds import bound_B
from induced_matching.constructive import (
    CASE1,
    CLAIM2,
    FALLBACK,
    PotentialTable,
    RunConfig,
    SelectionError,
    check_partition,
    footprint,
    footprint_sets,
    neighborhood_profile,
    pad_pendant_holders,
    potential,
    run,
    select_edge,
)
from induced_matching.exact import nu_s_exact
from induced_matching.generators import (
    attach_pendants,
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
from induced_matching.graph import Graph, disjoint_union, max_degree
from induced_matching.matching import is_induced_matching


def _f_oracle(g, v, delta):
    return sum((Fraction(1, len(g.neighbors(w))) for w in g.neighbors(v) if len(g.neighbors(w)) != delta),
               Fraction(0))


# --------------------------------------------------------------- padding

def test_padding_leaves_h1_alone():
    g = sharpness_h1(6)
    padded, padding = pad_pendant_holders(g, 6)
    assert padded is g and padding == {}


def test_padding_k2_inside_degree_five_graph():
    g = disjoint_union(path(2), star(5))
    padded, padding = pad_pendant_holders(g, 5)
    assert padded.degrees[0] == padded.degrees[1] == 5
    assert sorted(padding.values()) == [0] * 4 + [1] * 4
    assert max_degree(padded) == 5
    assert all(padded.degrees[p] == 1 for p in padding)


def test_padding_needs_pendants():
    g = cycle(7)
    assert pad_pendant_holders(g, 5)[0] is g


# ------------------------------------------------------------- potential

def test_potential_star():
    pt = potential(star(7), 7)
    assert pt[0] == 7 and all(pt[v] == 0 for v in range(1, 8))


@pytest.mark.parametrize("delta", [3, 4, 9, 16])
def test_potential_h1_core(delta):
    pt = potential(sharpness_h1(delta), delta)
    assert pt[0] == delta // 2


def test_potential_all_neighbours_full_degree():
    assert potential(complete(5), 4).exact_values() == [0] * 5


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_potential_matches_oracle_and_range(g):
    delta = max_degree(g)
    pt = potential(g, delta)
    for v in g.vertices():
        f = pt[v]
        assert f == _f_oracle(g, v, delta)
        assert abs(float(f) - pt.approx[v]) < 1e-9
        assert 0 <= f <= g.degrees[v]
        assert (f == 0) == all(g.degrees[w] == delta for w in g.neighbors(v))
    if g.n:
        best = max(pt.exact_values())
        assert pt.argmax() == min(v for v in g.vertices() if pt[v] == best)


def test_argmax_resolves_near_ties_exactly():
    # Two star centres with f = 3; the float screen for vertex 0 is nudged low
    # as rounding could do, and the exact pass must still pick vertex 0.
    g = disjoint_union(star(3), star(3))
    pt = potential(g, 3)
    approx = list(pt.approx)
    approx[0] -= 1e-13
    nudged = PotentialTable(g, 3, tuple(approx))
    assert pt[0] == pt[4] == 3
    assert nudged.argmax() == 0


# ----------------------------------------------------------------- profile

def test_profile_examples():
    assert tuple(vars(neighborhood_profile(sharpness_h1(16), 0, 16)).values()) == (8, 0, 0, 8)
    assert tuple(vars(neighborhood_profile(star(9), 0, 9)).values()) == (9, 0, 0, 0)
    assert tuple(vars(neighborhood_profile(complete(7), 3, 6)).values()) == (0, 0, 0, 6)


def test_profile_boundaries():
    # delta = 16: small degrees are 2..2, large are 3..15.
    g = Graph(40, [(0, i) for i in range(1, 5)] + [(1, j) for j in range(5, 7)] + [(2, j) for j in range(7, 9)]
              + [(3, j) for j in range(9, 24)] + [(4, j) for j in range(24, 39)])
    p = neighborhood_profile(g, 0, 16)
    assert (p.n1, p.ns, p.nl, p.nd) == (0, 0, 2, 2)
    assert p.total == 4


# ---------------------------------------------------------------- selection

def test_select_on_h1_1000():
    g = sharpness_h1(1000)
    (u, v), label = select_edge(g, 1000)
    assert (u, v) == (501, 0) and label == CASE1
    assert footprint(g, u, v) == 251001 == bound_B(1000)


def test_select_golden_p5():
    assert select_edge(path(5), 2) == ((0, 1), CLAIM2)


def test_select_two_k2_forced_delta():
    assert select_edge(disjoint_union(path(2), path(2)), 2) == ((1, 0), CASE1)


def test_select_falls_back_when_nothing_certifies():
    assert select_edge(star(10), 2) == ((0, 1), FALLBACK)
    assert select_edge(c5_squared(), 4)[1] == FALLBACK


def test_select_edgeless():
    with pytest.raises(SelectionError):
        select_edge(Graph(3), 3)


def test_fallback_minimises_footprint():
    g = random_graph(14, 0.35, 4)
    (u, v), label = select_edge(g, 1)  # bound_B(1) = 2 forces the fallback
    assert label == FALLBACK
    best = min((footprint(g, a, b), (a, b)) for a, b in g.edges())
    assert (footprint(g, u, v), (u, v)) == best


def test_footprint_sets_on_p5():
    s, i = footprint_sets(path(5), 1, 2)
    assert s == {0, 1, 2, 3} and i == {4}


# --------------------------------------------------------------------- run

def test_run_h1_1000():
    g = sharpness_h1(1000)
    m, trace = run(g)
    assert len(m) == 1 and len(trace.steps) == 1
    step = trace.steps[0]
    assert step.certified and step.footprint == 251001
    assert trace.certificate_ok and check_partition(trace)


def test_run_p5():
    m, trace = run(path(5))
    assert len(m) == 2 == nu_s_exact(path(5)).value
    assert is_induced_matching(path(5), m)
    assert not trace.theorem_applies


def test_run_exception_graphs_use_fallback():
    for g in (c5_squared(), k33_plus()):
        m, trace = run(g)
        assert len(m) == 1 and trace.steps[0].case == FALLBACK and not trace.steps[0].certified
        assert trace.certificate_ok  # delta < delta0, no claim made


def test_run_exchanges_synthetic_pendant():
    g = disjoint_union(path(2), star(10))
    m, trace = run(g)
    assert m.sorted_edges() == [(0, 1), (2, 3)]
    second = trace.steps[1]
    assert second.edge[1] >= g.n and second.matched_edge == (0, 1)
    assert trace.padding_added == 18 and check_partition(trace)


def test_run_empty_and_isolated():
    m, trace = run(Graph(4))
    assert len(m) == 0 and trace.steps == [] and trace.n_working == 0
    m, trace = run(Graph(5, [(1, 3)]))
    assert m.sorted_edges() == [(1, 3)] and check_partition(trace)


def test_config_limits():
    with pytest.raises(ValueError):
        RunConfig(100)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        RunConfig(200)
    assert caught and "empirical" in str(caught[0].message)


def test_low_delta0_certifies_h1_300():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        m, trace = run(sharpness_h1(300), RunConfig(200))
    assert trace.theorem_applies and trace.certificate_ok and len(m) == 1


def _check_run(g):
    m, trace = run(g)
    assert is_induced_matching(g, m)
    assert len(m) == len(trace.steps)
    assert check_partition(trace)
    assert all(max(e) < g.n for e in m)  # no synthetic vertex survives the exchange
    assert trace.n_working >= sum(1 for d in g.degrees if d)
    if trace.steps:
        assert len(m) >= math.ceil(trace.n_working / trace.max_footprint)
    if trace.all_certified and trace.B:
        assert len(m) >= math.ceil(sum(1 for d in g.degrees if d) / trace.B)
    return m, trace


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=12))
def test_run_properties_small(g):
    _check_run(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.floats(0.01, 0.9), st.integers(0, 2**32 - 1))
def test_run_properties_random(n, p, seed):
    _check_run(random_graph(n, p, seed))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.integers(1, 4))
def test_run_properties_pendant_heavy(base, k):
    _check_run(attach_pendants(base, k))


def test_deterministic_trace():
    g = random_graph(80, 0.08, 21)
    assert run(g)[1].steps == run(g)[1].steps


@pytest.mark.parametrize("delta", [3, 4, 7, 12])
def test_sharpness_graphs_constructive_optimal(delta):
    for g in (sharpness_h1(delta), sharpness_h2(delta)):
        m, trace = run(g)
        assert len(m) == 1 and trace.steps[0].certified
