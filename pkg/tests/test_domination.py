import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qdom.domination import (
    NOT_COVERED,
    closed_form_gamma,
    corona_gamma_half_check,
    domination_number,
    dominates,
    gamma,
    minimum_dominating_sets,
    structured_mds_exists,
)
from qdom.families import FamilySpec, make
from qdom.graph import bits, build, coalesce, complete, cycle, path, p_dominators, pendant_vertices, star

from conftest import random_connected_graph, random_graph

S4_PLUS = build(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def brute_gamma(g):
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if dominates(g, sum(1 << v for v in combo)):
                return k


def brute_mds(g):
    k = brute_gamma(g)
    return sorted(
        sum(1 << v for v in combo)
        for combo in itertools.combinations(range(g.n), k)
        if dominates(g, sum(1 << v for v in combo))
    )


def test_named_values():
    assert gamma(path(6)) == 2
    assert gamma(cycle(7)) == 3
    assert gamma(complete(5)) == 1


def test_certificate_witness_dominates():
    c = domination_number(cycle(10))
    assert c.gamma == 4 and dominates(cycle(10), c.witness)
    assert c.to_json()["gamma"] == 4 and len(c.to_json()["witness"]) == 4


def test_minimum_dominating_sets_examples():
    assert sorted(minimum_dominating_sets(cycle(3))) == [1, 2, 4]
    assert minimum_dominating_sets(path(3)) == [1 << 1]
    assert minimum_dominating_sets(S4_PLUS) == [1 << 0]


def test_structured_examples():
    assert structured_mds_exists(cycle(4), must_include=[0]).exists
    assert not structured_mds_exists(path(2), must_exclude=[0, 1]).exists
    tree = build(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)])
    res = structured_mds_exists(tree, bits(p_dominators(tree)), bits(pendant_vertices(tree)))
    assert res.exists and dominates(tree, res.witness)


@pytest.mark.parametrize(
    "spec, expected",
    [
        ({"kind": "Cycle", "params": {"n": 10}}, 4),
        ({"kind": "ScriptH3", "params": {"n": 11, "alpha": 3}}, 4),
        ({"kind": "C3Star", "params": {"k": 3, "n": 8}}, 2),
    ],
)
def test_closed_form_examples(spec, expected):
    fs = FamilySpec.from_json(spec)
    assert closed_form_gamma(fs) == expected
    assert gamma(make(fs)[0]) == expected


def test_closed_form_not_covered():
    assert closed_form_gamma(FamilySpec("Lollipop", {"g": 3, "l": 2})) is NOT_COVERED


def test_corona_examples():
    for g in (cycle(4), path(4)):
        check = corona_gamma_half_check(g)
        assert check.gamma_is_half and check.structure_is_c4_or_corona
    check = corona_gamma_half_check(cycle(6))
    assert check.agree and not check.gamma_is_half


def test_solver_matches_brute_force():
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert gamma(g) == brute_gamma(g)


def test_enumeration_matches_brute_force():
    rng = random.Random(6)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        assert sorted(minimum_dominating_sets(g)) == brute_mds(g)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 14), st.randoms(use_true_random=False))
def test_ore_bound(n, rng):
    g = random_connected_graph(rng, n, rng.random() * 0.3)
    assert 2 * gamma(g) <= n


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8), st.integers(3, 6), st.randoms(use_true_random=False))
def test_star_coalescence_changes_gamma_by_at_most_one(nh, k, rng):
    h = random_connected_graph(rng, nh, 0.3)
    u = rng.randrange(nh)
    g = coalesce(h, u, star(k), 0).graph
    assert gamma(g) - 1 <= gamma(h) <= gamma(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10), st.randoms(use_true_random=False))
def test_support_vertex_with_two_leaves_is_forced(n, rng):
    g = random_connected_graph(rng, n, 0.15)
    v = rng.randrange(n)
    g = coalesce(coalesce(g, v, path(2), 0).graph, v, path(2), 0).graph
    leaves = [w for w in g.neighbors(v) if g.degree(w) == 1]
    assert len(leaves) >= 2
    for s in minimum_dominating_sets(g):
        assert s >> v & 1
        assert not any(s >> w & 1 for w in leaves)
