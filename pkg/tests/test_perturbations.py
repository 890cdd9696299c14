import random

import pytest

from qdom.canon import is_isomorphic
from qdom.domination import gamma
from qdom.errors import InvalidSpec, PreconditionViolated, UnknownTheorem
from qdom.families import make_curly_f, make_cycle, make_h1, make_h2
from qdom.graph import build, cycle, girth, is_unicyclic, path, star
from qdom.perturbations import (
    FView,
    TRANSFORM_LEMMAS,
    TransformSpec,
    apply,
    f_graphs,
    girth3_improvement,
    lemma33_case,
    transform_g1,
    transform_g2,
    tree_move,
    verify_transform_lemma,
)
from qdom.spectra import Status, q_spectrum

from conftest import random_connected_graph


def test_rotation_pair_on_circ_graph():
    g, labels = make_curly_f(5, 1, [2], circ=True)
    view = FView(g, labels, 5, 1)
    g1, g2 = transform_g1(view, 2), transform_g2(view, 2)
    for h in (g1, g2):
        assert h.n == g.n and is_unicyclic(h)
    assert gamma(g) <= max(gamma(g1), gamma(g2))
    out = apply(g, labels, TransformSpec("G1", {"g": 5, "l": 1, "a": 2}))
    assert out.graph_out == g1 and out.measured["gamma_in"] == gamma(g)


def test_pendant_relocation_reaches_h2():
    g, labels = make_h1(8, 2, [2, 4])
    out = apply(g, labels, TransformSpec("PendantRelocate", {"eps": 8, "k": 2, "a": [2, 4]}))
    assert is_isomorphic(out.graph_out, make_h2(8, 2)[0])
    assert out.status is Status.PASS
    assert out.measured["gamma_in"] <= out.measured["gamma_out"]


def test_k_from_cycle_nine():
    g, labels = make_cycle(9)
    out = apply(g, labels, TransformSpec("KFromCycle"))
    assert out.measured["gamma_in"] == out.measured["gamma_out"] == 3
    assert out.measured["q_out"] < out.measured["q_in"] - 1e-8
    assert out.status is Status.PASS and girth(out.graph_out) == 3


def test_unknown_transform_rejected():
    g, labels = make_cycle(5)
    with pytest.raises(InvalidSpec):
        apply(g, labels, TransformSpec("Nope"))


def test_tree_move_symmetric_boundary():
    res = tree_move(cycle(3), 0, 1, path(2), 0)
    # |x_0| = |x_1| by symmetry; either the precondition is met and q drops, or nothing is asserted
    assert res.status is Status.PASS


def test_tree_move_towards_larger_entry_lowers_q():
    s4 = build(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    x = abs(q_spectrum(s4).eigvec)
    lo, hi = min(range(4), key=lambda v: x[v]), max(range(4), key=lambda v: x[v])
    res = tree_move(s4, hi, lo, path(2), 0)
    assert res.precondition_met
    assert res.q_after < res.q_before - 1e-8
    assert res.status is Status.PASS


def test_tree_move_random_instances():
    rng = random.Random(11)
    done = 0
    while done < 20:
        h = random_connected_graph(rng, rng.randint(3, 7), 0.4)
        if q_spectrum(h).q_min < 1e-9:
            continue
        v1, v2 = rng.sample(range(h.n), 2)
        t = rng.choice([path(2), path(3), star(3)])
        res = tree_move(h, v1, v2, t, 0)
        assert res.status is not Status.FAIL
        done += 1


def test_tree_move_preconditions():
    with pytest.raises(PreconditionViolated):
        tree_move(cycle(3), 0, 0, path(2), 0)
    with pytest.raises(PreconditionViolated):
        tree_move(cycle(4), 0, 1, path(2), 0)


def test_case_dispatch_covers_every_anchor():
    seen = set()
    for _, g, labels in f_graphs(7, 11, circ=True):
        view = FView(g, labels, 7, 1)
        for a in range(1, 8):
            seen.add(lemma33_case(view, a).case)
    assert {"i", "ii", "iii", "iv"} <= seen


def test_girth3_improvement_on_small_circ_graph():
    g, labels = make_curly_f(5, 1, [2], circ=True)
    res = girth3_improvement(g, labels, 5, 1)
    assert res.found and girth(res.graph) == 3
    assert res.gamma_in <= res.gamma_out and res.q_out < res.q_in - 1e-8


@pytest.mark.parametrize(
    "lemma, grid",
    [
        ("Lemma3.1", {"samples": 60}),
        ("Thm3.4", {"eps_max": 9}),
        ("Thm3.5", {"eps_max": 10, "k_max": 4}),
        ("Lemma3.7", {"g_max": 9}),
        ("Lemma3.8", {"gs": (5, 7), "n_max": 11}),
        ("Thm3.9", {"n_max": 15}),
        ("Lemma4.11", {"n_max": 15}),
        ("Thm4.2", {"gs": (5,), "n_max": 10}),
        ("Lemma4.9", {"n_max": 9}),
    ],
)
def test_small_sweeps_have_no_counterexamples(lemma, grid):
    report = verify_transform_lemma(lemma, **grid)
    assert report.records
    assert report.status is Status.PASS, report.counterexamples[:3]


def test_rotation_lemma_small_sweep_inequality_direction():
    report = verify_transform_lemma("Lemma3.3", gs=(5, 7), n_max=10)
    # every failure is an equality claim whose weak direction still holds
    for r in report.counterexamples:
        assert r.lemma == "Lemma3.3(iii)"
        assert r.gamma <= min(r.params["gamma_out"]), r.to_json()


def test_report_json_lines_are_deterministic():
    a = verify_transform_lemma("Thm3.9", n_max=11).to_jsonl()
    b = verify_transform_lemma("Thm3.9", n_max=11).to_jsonl()
    assert a == b and a.count("\n") >= 4


def test_unknown_lemma():
    assert "Lemma3.3" in TRANSFORM_LEMMAS
    with pytest.raises(UnknownTheorem):
        verify_transform_lemma("Lemma9.9")
