import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qdom.errors import DimensionMismatch, EdgeAbsent, InvalidSpec
from qdom.families import make_curly_f, make_lollipop
from qdom.graph import build, complete, cycle, path, two_coloring
from qdom.spectra import (
    Status,
    at_most,
    combine,
    eigvec_structure_check,
    interlacing_check,
    q_matrix,
    q_spectrum,
    rayleigh,
    strictly_less,
    symmetric_eigenvalues,
)

from conftest import random_connected_graph, random_graph

S4_PLUS = build(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def test_q_matrix_examples():
    assert np.array_equal(q_matrix(cycle(3)), [[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    assert np.array_equal(q_matrix(path(2)), [[1, 1], [1, 1]])
    expected = np.diag([3.0, 2, 2, 1])
    for i, j in [(0, 1), (0, 2), (0, 3), (1, 2)]:
        expected[i, j] = expected[j, i] = 1
    assert np.array_equal(q_matrix(S4_PLUS), expected)


def test_spectrum_examples():
    c3 = q_spectrum(cycle(3))
    assert np.allclose(c3.spectrum, [1, 1, 4], atol=1e-12)
    assert c3.q_min == pytest.approx(1, abs=1e-12)
    assert abs(q_spectrum(path(3)).q_min) < 1e-12
    assert q_spectrum(cycle(5)).q_min == pytest.approx(2 - 2 * math.cos(math.pi / 5), abs=1e-12)


def test_tolerance_range_enforced():
    with pytest.raises(InvalidSpec):
        q_spectrum(cycle(3), tol=1e-3)


def test_rayleigh_examples():
    assert rayleigh(path(2), [1, 1]) == 4
    g = cycle(6)
    x = [1 if c == 0 else -1 for c in two_coloring(g)]
    assert rayleigh(g, x) == 0
    cert = q_spectrum(cycle(7))
    assert abs(rayleigh(cycle(7), cert.eigvec) - cert.q_min) < 1e-10
    with pytest.raises(DimensionMismatch):
        rayleigh(cycle(3), [1, 2])


def test_interlacing_examples():
    assert all(interlacing_check(cycle(3), e) for e in cycle(3).edges())
    assert all(interlacing_check(complete(4), e) for e in complete(4).edges())
    with pytest.raises(EdgeAbsent):
        interlacing_check(path(3), (0, 2))


def test_interlacing_random_sweep():
    rng = random.Random(7)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 10))
        assert all(interlacing_check(g, e) for e in g.edges())


def test_eigenvalues_match_numpy():
    rng = random.Random(8)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 16), rng.random())
        q = q_matrix(g)
        assert np.max(np.abs(symmetric_eigenvalues(q) - np.linalg.eigvalsh(q))) < 1e-9


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.randoms(use_true_random=False))
def test_certificate_invariants(n, rng):
    g = random_graph(rng, n, rng.random())
    cert = q_spectrum(g)
    assert cert.residual <= cert.tol
    assert abs(np.linalg.norm(cert.eigvec) - 1) <= 1e-9
    assert cert.q_min >= -cert.tol
    assert np.all(np.diff(cert.spectrum) >= -1e-12)
    assert sum(cert.spectrum) == pytest.approx(2 * g.m, abs=1e-8)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.randoms(use_true_random=False))
def test_edge_sum_rayleigh_equals_matrix_form(n, rng):
    g = random_graph(rng, n, rng.random())
    x = np.random.default_rng(rng.randrange(2**32)).standard_normal(n)
    direct = float(x @ q_matrix(g) @ x)
    assert rayleigh(g, x) == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_json_round_trips_floats():
    cert = q_spectrum(cycle(5))
    assert cert.to_json()["q_min"] == cert.q_min


def test_status_combinators():
    assert combine([Status.PASS, Status.PASS]) is Status.PASS
    assert combine([Status.PASS, Status.INCONCLUSIVE]) is Status.INCONCLUSIVE
    assert combine([Status.INCONCLUSIVE, Status.FAIL]) is Status.FAIL
    assert strictly_less(0.0, 1.0) is Status.PASS
    assert strictly_less(1.0, 0.0) is Status.FAIL
    assert strictly_less(0.0, 1e-9) is Status.INCONCLUSIVE
    assert at_most(1.0, 1.0) is Status.PASS


def test_structure_lollipop_pendant_path_grows():
    g, labels = make_lollipop(3, 2)
    report = eigvec_structure_check(g)
    assert report.status is Status.PASS
    x = np.abs(q_spectrum(g).eigvec)
    assert x[labels.v(3)] < x[labels.v(4)] < x[labels.v(5)]


def test_structure_triangle_with_two_supports():
    g, labels = make_curly_f(3, 1, [1])
    report = eigvec_structure_check(g)
    assert report.status is Status.PASS
    assert report.checks["triangle_attachment_max"] is Status.PASS


def test_structure_tree_root_nonzero():
    g = build(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
    report = eigvec_structure_check(g)
    assert report.checks["tree_root_nonzero"] is Status.PASS
    assert report.status is Status.PASS


def test_structure_degenerate_is_inconclusive():
    assert eigvec_structure_check(cycle(5)).status is Status.INCONCLUSIVE
    symmetric, _ = make_curly_f(3, 1, [1, 2])
    assert eigvec_structure_check(symmetric).status is Status.INCONCLUSIVE
