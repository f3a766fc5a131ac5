import networkx as nx
import pytest

from induced_matching.generators import sharpness_h1, sharpness_h2
from induced_matching.graph import Graph, invariant_key, is_isomorphic_small
from induced_matching.scan import (
    nonisomorphic_graphs,
    scan_candidates,
    scan_exhaustive,
    scan_random,
)


def _from_nx(h):
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(idx[a], idx[b]) for a, b in h.edges()])


def _atlas_by_n(max_n):
    by_n = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() <= max_n:
            by_n.setdefault(h.number_of_nodes(), []).append(_from_nx(h))
    return by_n


def test_enumeration_matches_graph_atlas():
    ours = nonisomorphic_graphs(6)
    atlas = _atlas_by_n(6)
    for n in range(7):
        assert len(ours[n]) == len(atlas[n])
        buckets = {}
        for g in ours[n]:
            buckets.setdefault(invariant_key(g), []).append(g)
        for h in atlas[n]:
            matches = [g for g in buckets.get(invariant_key(h), []) if is_isomorphic_small(g, h)]
            assert len(matches) == 1


def test_candidates_filter():
    atlas = _atlas_by_n(6)
    expected = sum(
        1 for n in range(7) for h in atlas[n]
        if h.n and max(h.degrees) >= 3 and nx.is_connected(nx.Graph(list(h.edges())))
        and nx.Graph(list(h.edges())).number_of_nodes() == h.n
    )
    assert len(scan_candidates(6)) == expected


def test_scan_to_five_is_clean():
    r = scan_exhaustive(5)
    assert r.checked > 0 and r.violators == [] and r.exceptions == [] and r.inconclusive == []
    assert r.holds == r.checked


def test_scan_to_six_lists_sharpness_graphs_as_tight():
    r = scan_exhaustive(6)
    tight = [Graph(t["n"], [tuple(e) for e in t["edges"]]) for t in r.tight]
    for target in (sharpness_h1(3), sharpness_h2(3)):
        assert any(g.n == 6 and is_isomorphic_small(g, target) for g in tight)
    assert r.violators == []


def test_scan_refuses_large_n():
    with pytest.raises(ValueError):
        scan_exhaustive(8)


def test_random_scan_deterministic():
    a = scan_random(15, 8, 9, seed=4)
    b = scan_random(15, 8, 9, seed=4)
    assert a.to_dict() == b.to_dict()
    assert a.checked == 15 and a.violators == []
