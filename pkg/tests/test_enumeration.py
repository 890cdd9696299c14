import json

import pytest
from hypothesis import given, settings, strategies as st

from qdom.canon import cert, is_isomorphic
from qdom.domination import gamma
from qdom.errors import BudgetExceeded, EmptyUniverse, InvalidSpec, UnknownTheorem
from qdom.families import make_script_h3
from qdom.graph import build, is_connected, is_unicyclic, odd_girth, to_graph6, two_coloring
from qdom.enumeration import (
    MeasurementCache,
    UniverseSpec,
    band,
    connected_graphs,
    enumerate_graphs,
    extremal_search,
    in_band,
    known_theorems,
    labeled_class_count,
    rooted_trees,
    spanning_unicyclic_witness,
    unicyclic_graphs,
    universe,
    verify_theorem,
)
from qdom.spectra import Status

S4_PLUS = build(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def test_connected_all_four():
    assert len(list(enumerate_graphs(UniverseSpec("ConnectedAll", 4)))) == 6


def test_unicyclic_nonbipartite_four_is_s4_plus():
    graphs = list(enumerate_graphs(UniverseSpec("UnicyclicNonbipartite", 4)))
    assert len(graphs) == 1 and is_isomorphic(graphs[0], S4_PLUS)


def test_unicyclic_girth3_order5_two_ways():
    constructive = len(unicyclic_graphs(5, [3]))
    labeled = labeled_class_count(5, lambda g: is_connected(g) and g.m == g.n and odd_girth(g) == 3)
    assert constructive == labeled == 3


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_counts_cross_checked_against_labeled_dedup(n):
    assert len(connected_graphs(n)) == labeled_class_count(n, is_connected)
    nonbip = [g for g in unicyclic_graphs(n, range(3, n + 1, 2))]
    assert len(nonbip) == labeled_class_count(n, lambda g: is_connected(g) and g.m == g.n and two_coloring(g) is None)


def test_known_class_counts():
    # connected graphs: 1, 1, 2, 6, 21, 112, 853, 11117
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    # unicyclic graphs of every girth
    assert [len(unicyclic_graphs(n, range(3, n + 1))) for n in range(3, 11)] == [1, 2, 5, 13, 33, 89, 240, 657]
    counts = [len(unicyclic_graphs(n, range(3, n + 1, 2))) for n in range(3, 11)]
    assert counts == [1, 1, 4, 8, 23, 55, 155, 403]


def test_rooted_tree_counts():
    assert [len(rooted_trees(k)) for k in range(1, 9)] == [1, 1, 2, 4, 9, 20, 48, 115]


def test_enumeration_is_deterministic_and_duplicate_free():
    spec = UniverseSpec("UnicyclicNonbipartite", 9)
    a = [to_graph6(g) for g in enumerate_graphs(spec)]
    b = [to_graph6(g) for g in enumerate_graphs(spec)]
    assert a == b
    assert len({cert(g) for g in enumerate_graphs(spec)}) == len(a)
    assert all(is_unicyclic(g) and two_coloring(g) is None for g in enumerate_graphs(spec))


def test_budget_guard_and_bad_kind():
    with pytest.raises(BudgetExceeded):
        UniverseSpec("ConnectedAll", 9)
    with pytest.raises(BudgetExceeded):
        UniverseSpec("UnicyclicNonbipartite", 13)
    with pytest.raises(InvalidSpec):
        UniverseSpec("Everything", 5)


def test_band():
    assert band(9) == [4] and band(8) == [4] and band(10) == [4, 5]
    assert not in_band(4, 1) and in_band(4, 2)


def test_extremal_examples(cache):
    res = extremal_search(UniverseSpec("UnicyclicNonbipartite", 9, gamma=4), cache=cache)
    assert res.unique and is_isomorphic(res.minimizers[0], make_script_h3(9, 3)[0])
    assert res.runner_up_gap > 1e-8
    res = extremal_search(UniverseSpec("UnicyclicNonbipartite", 8, gamma=4), cache=cache)
    assert res.unique and is_isomorphic(res.minimizers[0], make_script_h3(8, 4)[0])
    res = extremal_search(UniverseSpec("ConnectedNonbipartite", 4), cache=cache)
    assert res.unique and is_isomorphic(res.minimizers[0], S4_PLUS)


def test_empty_universe(cache):
    with pytest.raises(EmptyUniverse):
        extremal_search(UniverseSpec("UnicyclicNonbipartite", 6, gamma=4), cache=cache)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 9), st.integers(1, 4), st.sampled_from([3, 5, 7]))
def test_dropping_a_filter_never_raises_the_minimum(n, k, g):
    loose = UniverseSpec("UnicyclicNonbipartite", n, gamma=k)
    tight = UniverseSpec("UnicyclicNonbipartite", n, gamma=k, girth=g)
    try:
        t = extremal_search(tight)
    except EmptyUniverse:
        return
    assert extremal_search(loose).min_value <= t.min_value


def test_cache_resumes(tmp_path):
    path = tmp_path / "c.jsonl"
    spec = UniverseSpec("ConnectedNonbipartite", 5)
    first = universe(spec, MeasurementCache(path))
    lines = path.read_text().splitlines()
    assert len(lines) == len(first) and all(json.loads(line)["g6"] for line in lines)
    again = MeasurementCache(path)
    assert len(again) == len(first)
    assert universe(spec, again) == first
    assert path.read_text().splitlines() == lines  # nothing re-measured


def test_parallel_measurement_matches_serial():
    graphs = list(connected_graphs(6))
    serial = MeasurementCache().measure_all(graphs)
    parallel = MeasurementCache().measure_all(graphs, workers=2)
    assert serial == parallel


def test_spanning_unicyclic_witness_is_valid():
    for g in connected_graphs(6):
        og = odd_girth(g)
        if two_coloring(g) is not None:
            continue
        h = spanning_unicyclic_witness(g)
        assert h is not None
        assert h.n == g.n and is_unicyclic(h)
        assert all(g.has_edge(u, v) for u, v in h.edges())
        assert odd_girth(h) == og and gamma(h) == gamma(g)


@pytest.mark.parametrize(
    "theorem, n_range",
    [
        ("Bipartite", range(2, 8)),
        ("Lemma2.6", range(2, 8)),
        ("Lemma2.7", range(3, 8)),
        ("Lemma2.8", range(2, 8)),
        ("Lemma2.10", range(2, 8)),
        ("Thm4.4", range(4, 10)),
        ("Thm4.7", range(5, 10)),
        ("Thm4.8", range(4, 10)),
        ("Thm4.10", range(5, 10)),
        ("Thm5.1", range(4, 8)),
        ("Thm5.4", range(4, 8)),
    ],
)
def test_small_theorem_sweeps(theorem, n_range, cache):
    report = verify_theorem(theorem, list(n_range), cache=cache)
    assert report.records
    assert report.status is Status.PASS, report.counterexamples[:3]


def test_registry():
    names = known_theorems()
    assert {"Thm3.2", "Thm4.4", "Thm5.3", "Lemma2.7", "Lemma3.3"} <= set(names)
    with pytest.raises(UnknownTheorem):
        verify_theorem("Thm9.9")
