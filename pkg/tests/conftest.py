import random

import pytest

from qdom.enumeration import MeasurementCache
from qdom.graph import Graph, build


@pytest.fixture(scope="session")
def cache(tmp_path_factory) -> MeasurementCache:
    """One measurement cache shared by every universe sweep in the session."""
    return MeasurementCache(str(tmp_path_factory.mktemp("qdom") / "measurements.jsonl"))


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < p:
                edges.add((i, j))
    perm = list(range(n))
    rng.shuffle(perm)
    return build(n, [(perm[a], perm[b]) for a, b in edges])


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("::")[-1][len("test_criterion_"):]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            num, _, label = name.partition("_")
            terminalreporter.write_line(f"criterion {int(num):2d} {verdict}  {label.replace('_', ' ')}")
