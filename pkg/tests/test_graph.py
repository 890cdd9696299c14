import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from qdom.canon import is_isomorphic
from qdom.errors import DuplicateEdge, EdgeAbsent, EdgePresent, MalformedGraph6, OutOfRange, SelfLoop
from qdom.graph import (
    INF,
    add_edge,
    build,
    coalesce,
    complete,
    cycle,
    delete_edge,
    delete_vertices,
    from_dot,
    from_graph6,
    girth,
    is_connected,
    odd_girth,
    path,
    profile,
    star,
    to_dot,
    to_graph6,
)

from conftest import random_graph

S4_PLUS = [(0, 1), (0, 2), (0, 3), (1, 2)]


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_build_examples():
    assert build(3, [(0, 1), (1, 2), (2, 0)]).m == 3
    k1 = build(1, [])
    assert (k1.n, k1.m) == (1, 0)
    s4 = build(4, S4_PLUS)
    assert s4.m == 4 and s4.degrees() == [3, 2, 2, 1]


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (3, [(0, 3)], OutOfRange),
        (3, [(1, 1)], SelfLoop),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (0, [], OutOfRange),
        (65, [], OutOfRange),
    ],
)
def test_build_errors(n, edges, error):
    with pytest.raises(error):
        build(n, edges)


def test_profile_c5():
    p = profile(cycle(5))
    assert p.connected and not p.bipartite
    assert (p.girth, p.odd_girth, p.min_degree) == (5, 5, 2)
    assert not p.pendant_vertices


def test_profile_p4():
    p = profile(path(4))
    assert p.connected and p.bipartite
    assert p.girth == INF and p.odd_girth == INF and p.min_degree == 1
    assert p.pendant_vertices == {0, 3}
    assert p.p_dominators == {1, 2}


def test_profile_lollipop_3_1():
    g = build(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    p = profile(g)
    assert (p.girth, p.odd_girth) == (3, 3)
    assert p.pendant_vertices == {3} and p.p_dominators == {2}


def test_profile_json_uses_null_for_infinity():
    assert profile(path(3)).to_json()["girth"] is None


def test_edge_operations():
    assert is_isomorphic(delete_edge(cycle(3), (0, 1)), path(3))
    assert is_isomorphic(add_edge(path(3), (0, 2)), cycle(3))
    s4 = build(4, S4_PLUS)
    rest, _ = delete_vertices(s4, [3])
    assert is_isomorphic(rest, cycle(3))
    with pytest.raises(EdgePresent):
        add_edge(cycle(3), (0, 1))
    with pytest.raises(EdgeAbsent):
        delete_edge(path(3), (0, 2))


def test_coalesce_lollipop_and_bowtie():
    lol = coalesce(cycle(3), 2, path(2), 0)
    assert is_isomorphic(lol.graph, build(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    bowtie = coalesce(cycle(3), 0, cycle(3), 1)
    assert bowtie.graph.n == 5 and bowtie.graph.degree(bowtie.root) == 4
    assert bowtie.right_map[1] == 0


def test_graph6_examples():
    assert to_graph6(complete(4)) == "C~"
    assert from_graph6("C~") == complete(4)
    assert to_graph6(path(3)) == "Bg"
    assert from_graph6("Bg") == path(3)


@pytest.mark.parametrize("text", ["", "C", "C~~", "B\x7f", "~"])
def test_graph6_malformed(text):
    with pytest.raises(MalformedGraph6):
        from_graph6(text)


def test_graph6_round_trip_and_networkx_agreement():
    rng = random.Random(1)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 20), rng.random())
        text = to_graph6(g)
        assert from_graph6(text) == g
        assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text


def test_girth_and_connectivity_against_networkx():
    rng = random.Random(2)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10), 0.3)
        h = to_nx(g)
        assert is_connected(g) == nx.is_connected(h)
        expected = nx.girth(h)
        assert girth(g) == expected
        assert (odd_girth(g) == INF) == nx.is_bipartite(h)


def test_dot_round_trip():
    g = star(5)
    assert from_dot(to_dot(g)) == g


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_degree_sum_and_graph6_round_trip(n, rng):
    g = random_graph(rng, n, rng.random())
    assert sum(g.degrees()) == 2 * g.m
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 15))
def test_cycle_girth_parity(n):
    p = profile(cycle(n))
    assert p.girth == n
    assert p.bipartite == (n % 2 == 0)
    assert p.odd_girth == (INF if n % 2 == 0 else n)
